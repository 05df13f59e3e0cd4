from fractions import Fraction

from ...models.expression.constant_expr import (
    Add,
    ConstantExpr,
    Const,
    ExpIPi,
    Im,
    Li,
    Mpl,
    Mul,
    Pow,
    Rat,
    Re,
    Scale,
    Sqrt,
)
from ...models.precision.precision import ApComplex
from ...services.log.log_service import LogService
from ...services.zeta.zeta_service import ZetaService
from ...utils.cut_side import CutSide
from ...utils.errors import EvaluationError
from ...utils.named_constant import NamedConstant

# constante → (s, q, {r: χ(r)}): q^{-s} Σ χ(r) ζ(s, r/q)
L_PATTERNS = {
    NamedConstant.CATALAN_G: (2, 4, {1: 1, 3: -1}),
    NamedConstant.BETA4: (4, 4, {1: 1, 3: -1}),
    NamedConstant.L_8_2_3: (3, 8, {1: 1, 3: -1, 5: -1, 7: 1}),
    NamedConstant.L_8_4_4: (4, 8, {1: 1, 3: 1, 5: -1, 7: -1}),
    NamedConstant.L_3_2_4: (4, 3, {1: 1, 2: -1}),
    NamedConstant.L_12_4_3: (3, 12, {1: 1, 5: -1, 7: -1, 11: 1}),
}


class ConstantsService:

    @staticmethod
    def hurwitz_zeta(s, a, ctx):
        return ZetaService.hurwitz_zeta(s, a, ctx)

    @staticmethod
    def named_constant(name, ctx):
        if isinstance(name, str):
            name = NamedConstant.from_name(name)
        if not isinstance(name, NamedConstant):
            raise TypeError("El campo 'name' debe ser de tipo 'NamedConstant'.")
        return ApComplex.from_value(ConstantsService.constant_value(name, ctx), ctx)

    @staticmethod
    def eval_expr(expr, ctx):
        try:
            value = ConstantsService.evaluate(expr, ctx)
        except ZeroDivisionError as e:
            LogService.create_log(
                {
                    "module": f"{ConstantsService.__name__}.{ConstantsService.eval_expr.__name__}",
                    "message": f"División por cero evaluando {expr}",
                }
            )
            raise EvaluationError("División por cero en la expresión") from e
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def constant_value(name, ctx):
        key = ("const", name)
        if key not in ctx.memo:
            ctx.memo[key] = ConstantsService._compute_constant(name, ctx)
        return ctx.memo[key]

    @staticmethod
    def dirichlet_l_value(name, ctx):
        s, q, pattern = L_PATTERNS[name]
        total = ctx.mp.fsum(
            sign * ZetaService.zeta_value(s, Fraction(r, q), ctx) for r, sign in pattern.items()
        )
        return total / ctx.mp.mpf(q) ** s

    @staticmethod
    def _compute_constant(name, ctx):
        mp = ctx.mp
        if name in L_PATTERNS:
            return ConstantsService.dirichlet_l_value(name, ctx)
        if name == NamedConstant.PI:
            return +mp.pi
        if name == NamedConstant.ZETA3:
            return ZetaService.zeta_value(3, Fraction(1), ctx)
        if name == NamedConstant.PHI:
            return (1 + mp.sqrt(5)) / 2
        if name == NamedConstant.LAM:
            return mp.log(2)
        if name == NamedConstant.BIG_LAM:
            return mp.log(3)
        if name == NamedConstant.POUND:
            return mp.log((1 + mp.sqrt(5)) / 2)
        if name == NamedConstant.SCRIPT_L:
            return mp.log(5)
        if name == NamedConstant.LAM_TILDE:
            return mp.log(1 + mp.sqrt(2))
        if name == NamedConstant.BIG_LAM_TILDE:
            return mp.log(2 + mp.sqrt(3))
        if name == NamedConstant.MATHCAL_G:
            from ...services.polylog.polylog_service import PolylogService

            point = mp.mpc(mp.mpf(1) / 2, mp.mpf(1) / 2)
            return mp.im(PolylogService.li_value(3, point, CutSide.AUTO, ctx))
        raise ValueError(f"La constante '{name}' no existe.")

    @staticmethod
    def point_value(point, ctx):
        """Valor numérico (mpc) de un punto exacto o de un número ya evaluado."""
        if isinstance(point, ConstantExpr):
            return ConstantsService.evaluate(point, ctx)
        return ctx.mp.mpc(ctx.convert(point))

    @staticmethod
    def evaluate(expr, ctx):
        mp = ctx.mp

        if isinstance(expr, Rat):
            return mp.mpc(ctx.convert(expr.re), ctx.convert(expr.im))
        if isinstance(expr, Sqrt):
            return mp.mpc(mp.sqrt(ctx.convert(expr.radicand)))
        if isinstance(expr, Const):
            return mp.mpc(ConstantsService.constant_value(expr.name, ctx))
        if isinstance(expr, ExpIPi):
            return mp.expjpi(ctx.convert(expr.turn))
        if isinstance(expr, Li):
            return ConstantsService._leaf(expr, ctx)
        if isinstance(expr, Mpl):
            return ConstantsService._leaf(expr, ctx)
        if isinstance(expr, Im):
            return mp.mpc(mp.im(ConstantsService.evaluate(expr.arg, ctx)))
        if isinstance(expr, Re):
            return mp.mpc(mp.re(ConstantsService.evaluate(expr.arg, ctx)))
        if isinstance(expr, Add):
            return mp.fsum(ConstantsService.evaluate(t, ctx) for t in expr.terms)
        if isinstance(expr, Mul):
            return mp.fprod(ConstantsService.evaluate(f, ctx) for f in expr.factors)
        if isinstance(expr, Pow):
            base = ConstantsService.evaluate(expr.base, ctx)
            if expr.exponent < 0 and base == 0:
                raise ZeroDivisionError("Potencia negativa de cero")
            return base ** expr.exponent
        if isinstance(expr, Scale):
            return ctx.convert(expr.coeff) * ConstantsService.evaluate(expr.arg, ctx)

        raise TypeError(f"Nodo de expresión desconocido: {type(expr).__name__}")

    @staticmethod
    def _leaf(expr, ctx):
        from ...services.polylog.polylog_service import PolylogService

        key = ("leaf", expr)
        if key in ctx.memo:
            return ctx.memo[key]

        if isinstance(expr, Li):
            point = ConstantsService.evaluate(expr.point, ctx)
            value = PolylogService.li_value(expr.s, point, expr.side, ctx)
        else:
            args = [ConstantsService.evaluate(a, ctx) for a in expr.args]
            value = PolylogService.mpl_value(expr.weights, args, ctx)

        ctx.memo[key] = value
        return value
