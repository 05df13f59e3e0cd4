from math import factorial

from ...models.polylog.polylog import GplWord
from ...models.precision.precision import ApComplex
from ...models.quadrature.quadrature import Segment
from ...services.constants.constants_service import ConstantsService
from ...services.log.log_service import LogService
from ...services.polylog.polylog_service import PolylogService
from ...services.quadrature.quadrature_service import QuadratureService
from ...utils.cut_side import CutSide
from ...utils.errors import BranchJumpError, DivergentError, DomainError
from ...utils.named_constant import NamedConstant

MAX_CONTOUR_K = 6
SCAN_SAMPLES = 64
MAX_SUBDIVISIONS = 8


class ContourService:
    """Representaciones integrales de S_k(z) y de las funciones G."""

    @staticmethod
    def integrate_segment(f, seg, ctx):
        return QuadratureService.integrate_segment(f, seg, ctx)

    @staticmethod
    def beta_integral(k, y, ctx):
        """
        2∫_0^1 [Li_{k-1}(y·u) - Li_{k-1}(-y·u)] / (1+t²) dt con u = t/(1+t²),
        igual a Σ y^(2n+1) / ((2n+1)^k C(2n,n)).
        """
        ContourService._validate_k(k, ContourService.beta_integral.__name__)
        mp = ctx.mp
        y = ConstantsService.point_value(y, ctx)
        if abs(y.imag) <= ctx.eps and abs(y.real) > 2:
            LogService.create_log(
                {
                    "module": f"{ContourService.__name__}.{ContourService.beta_integral.__name__}",
                    "message": f"La integral beta cruza el corte para y = {mp.nstr(y, 15)}",
                }
            )
            raise DomainError("Para y real con |y| > 2 los argumentos de Li cruzan el corte")

        def integrand(t):
            weight = 1 / (1 + t * t)
            u = y * t * weight
            if k == 2:
                # 1 - y·u = ((1-t)² + (2-y)t)/(1+t²), sin cancelación en y = 2
                difference = mp.log(1 + u) - mp.log(((1 - t) ** 2 + (2 - y) * t) * weight)
            else:
                difference = PolylogService.li_value(k - 1, u, CutSide.AUTO, ctx) - PolylogService.li_value(
                    k - 1, -u, CutSide.AUTO, ctx
                )
            return 2 * difference * weight

        result = QuadratureService.integrate_segment(integrand, Segment(mp.mpc(0), mp.mpc(1)), ctx)
        return result.value

    @staticmethod
    def chen1_integral(ctx):
        return ContourService.beta_integral(3, 1, ctx)

    @staticmethod
    def chen2_contour(ctx):
        """Contorno i/φ → i → iφ, es decir genchen_contour(3, 1/φ)."""
        mp = ctx.mp
        phi = ConstantsService.constant_value(NamedConstant.PHI, ctx)
        return ContourService.genchen_contour(3, mp.mpc(1 / phi), ctx)

    @staticmethod
    def genchen_contour(k, w, ctx):
        """
        (2i/(k-2)!)[∫_{iw}^{i} log^{k-2}(c·z/(1+z²))·log(z/i)/(1+z²) dz
                   + ∫_{i}^{i/w} log^{k-2}(-c·z/(1+z²))·log(z/i)/(1+z²) dz]
        con c = (1-w²)/(iw). Vale Σ(-1)^n x^(2n+1)/((2n+1)^k C(2n,n)), x = (1-w²)/w.
        """
        ContourService._validate_k(k, ContourService.genchen_contour.__name__)
        mp = ctx.mp
        w = ConstantsService.point_value(w, ctx)
        unit = mp.mpc(0, 1)

        if w == 0 or (unit * w).imag <= 0 or (unit / w).imag <= 0:
            LogService.create_log(
                {
                    "module": f"{ContourService.__name__}.{ContourService.genchen_contour.__name__}",
                    "message": f"Parámetro de contorno no admisible w = {mp.nstr(w, 15)}",
                }
            )
            raise DomainError("El contorno exige Im(iw) > 0 e Im(i/w) > 0")

        c = (1 - w * w) / (unit * w)
        power = k - 2

        def make(scale):
            def argument(z):
                return scale * z / (1 + z * z)

            def integrand(z):
                return mp.log(argument(z)) ** power * mp.log(z / unit) / (1 + z * z)

            return argument, integrand

        first_arg, first = make(c)
        second_arg, second = make(-c)
        total = ContourService._integrate_path(first, [first_arg], unit * w, unit, ctx)
        total += ContourService._integrate_path(second, [second_arg], unit, unit / w, ctx)

        value = 2 * unit / factorial(power) * total
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def secondopen_integrand(x, ctx):
        """[Li_2(ix/(1+x²)) - Li_2(-ix/(1+x²))] / (1+x²)"""
        mp = ctx.mp
        x = mp.mpc(x)
        weight = 1 / (1 + x * x)
        u = mp.mpc(0, 1) * x * weight
        difference = PolylogService.li_value(2, u, CutSide.AUTO, ctx) - PolylogService.li_value(
            2, -u, CutSide.AUTO, ctx
        )
        return difference * weight

    @staticmethod
    def secondopen_integral(ctx, lower=0, upper=1):
        """(2/i)∫ sobre [lower, upper]; en [0, 1] reproduce S_3(-1)."""
        mp = ctx.mp
        result = QuadratureService.integrate_segment(
            lambda x: ContourService.secondopen_integrand(x, ctx),
            Segment(mp.mpc(lower), mp.mpc(upper)),
            ctx,
        )
        return ApComplex.from_value(2 * result.value.value / mp.mpc(0, 1), ctx)

    @staticmethod
    def gpl_recursion_quadrature(word, ctx):
        """G(a1, …, an; z) = ∫_0^z G(a2, …, an; x)/(x - a1) dx con tanh-sinh en el nivel externo."""
        if not isinstance(word, GplWord):
            raise TypeError("El campo 'word' debe ser de tipo 'GplWord'.")
        mp = ctx.mp
        letters = tuple(ConstantsService.point_value(a, ctx) for a in word.letters)
        z = ConstantsService.point_value(word.arg, ctx)
        if not letters:
            return ApComplex.from_value(1, ctx)

        first, rest = letters[0], letters[1:]
        if first != 0:
            ratio = first / z
            if abs(ratio.imag) <= ctx.eps * 100 and 0 < ratio.real <= 1:
                raise DivergentError("Una letra cae sobre el segmento de integración")

        def integrand(x):
            return PolylogService.gpl_value(rest, x, ctx) / (x - first)

        result = QuadratureService.integrate_segment(integrand, Segment(mp.mpc(0), z), ctx)
        return result.value

    @staticmethod
    def _integrate_path(f, arguments, z0, z1, ctx):
        for argument in arguments:
            ContourService._assert_continuous(argument, z0, z1, ctx)
        return QuadratureService.integrate_segment(f, Segment(z0, z1), ctx).value.value

    @staticmethod
    def _assert_continuous(argument, z0, z1, ctx):
        """El argumento de cada log no puede saltar más de π/2 entre muestras vecinas."""
        mp = ctx.mp
        limit = mp.pi / 2

        def phase(t):
            return mp.arg(argument(z0 + (z1 - z0) * t))

        def check(ta, tb, pa, pb, level):
            if abs(pb - pa) <= limit:
                return
            if level >= MAX_SUBDIVISIONS:
                LogService.create_log(
                    {
                        "module": f"{ContourService.__name__}.{ContourService._assert_continuous.__name__}",
                        "message": f"Salto de rama sin resolver entre t = {mp.nstr(ta, 10)} y t = {mp.nstr(tb, 10)}",
                    }
                )
                raise BranchJumpError("Salto de rama sin resolver en el contorno")
            tm = (ta + tb) / 2
            pm = phase(tm)
            check(ta, tm, pa, pm, level + 1)
            check(tm, tb, pm, pb, level + 1)

        ts = [mp.mpf(j) / SCAN_SAMPLES for j in range(1, SCAN_SAMPLES)]
        phases = [phase(t) for t in ts]
        for index in range(len(ts) - 1):
            check(ts[index], ts[index + 1], phases[index], phases[index + 1], 0)

    @staticmethod
    def _validate_k(k, operation):
        if not isinstance(k, int) or isinstance(k, bool) or not 2 <= k <= MAX_CONTOUR_K:
            LogService.create_log(
                {
                    "module": f"{ContourService.__name__}.{operation}",
                    "message": f"Se pidió una representación integral con k fuera de rango: {k}",
                }
            )
            raise ValueError(f"k debe estar entre 2 y {MAX_CONTOUR_K}.")
