from fractions import Fraction

from ...models.polylog.polylog import MAX_WEIGHT, GplWord, MplSpec, as_point, is_zero_point
from ...models.precision.precision import ApComplex
from ...models.quadrature.quadrature import Segment
from ...models.word.word import Word, WordCombination
from ...services.constants.constants_service import ConstantsService
from ...services.log.log_service import LogService
from ...services.quadrature.quadrature_service import QuadratureService
from ...services.shuffle.shuffle_service import ShuffleService
from ...services.zeta.zeta_service import ZetaService
from ...utils.cut_side import CutSide
from ...utils.errors import (
    DivergentError,
    EvaluationError,
    PoleError,
    PrecisionUnreachableError,
)

SERIES_RADIUS = 0.5
LOG_SERIES_RADIUS = 4
GPL_SERIES_THRESHOLD = 0.9
HOLDER_SPLITS = (Fraction(1, 2), Fraction(2, 5), Fraction(3, 5), Fraction(1, 3), Fraction(2, 3))
HOLDER_CLEARANCE = 0.05
HOLDER_DEPTH = 3
MPL_TERM_CAP = 2**16
MPL_FIRST_BLOCK = 256


class PolylogService:
    """Li_s(z), polilogaritmos múltiples y funciones G de Goncharov."""

    # ---------------------------------------------------------------- Li_s

    @staticmethod
    def li(s, z, side=CutSide.AUTO, ctx=None):
        if not isinstance(s, int) or isinstance(s, bool) or not 1 <= s <= MAX_WEIGHT:
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.li.__name__}",
                    "message": f"Se pidió Li_s con s inválido: {s}",
                }
            )
            raise ValueError(f"El peso s debe ser un entero entre 1 y {MAX_WEIGHT}.")

        if isinstance(side, str):
            side = CutSide(side)

        point = ConstantsService.point_value(as_point(z), ctx)
        return ApComplex.from_value(PolylogService.li_value(s, point, side, ctx), ctx)

    @staticmethod
    def li_value(s, z, side, ctx):
        mp = ctx.mp
        z = mp.mpc(z)
        if not mp.isfinite(z):
            raise EvaluationError("Argumento no finito para Li_s")

        upper = side != CutSide.LOWER
        on_cut = z.imag == 0 and z.real > 1

        if s == 1:
            if z == 1:
                LogService.create_log(
                    {
                        "module": f"{PolylogService.__name__}.{PolylogService.li_value.__name__}",
                        "message": "Se evaluó Li_1 en su polo z = 1",
                    }
                )
                raise PoleError("Li_1 tiene un polo en z = 1")
            if on_cut:
                return mp.mpc(-mp.log(z.real - 1), mp.pi if upper else -mp.pi)
            return -mp.log(1 - z)

        if z == 0:
            return mp.mpc(0)
        if z == 1:
            return mp.mpc(ZetaService.zeta_int(s, ctx))
        if abs(z) <= SERIES_RADIUS:
            return PolylogService._li_series(s, z, ctx)

        mu = mp.mpc(mp.log(z.real)) if on_cut else mp.log(z)
        if abs(mu) <= LOG_SERIES_RADIUS:
            return PolylogService._li_log_series(s, mu, on_cut, upper, ctx)
        return PolylogService._li_inversion(s, z, on_cut, upper, ctx)

    @staticmethod
    def _li_series(s, z, ctx):
        mp = ctx.mp
        radius = abs(z)
        total = mp.mpc(0)
        power = mp.mpc(1)
        n = 0
        while True:
            n += 1
            power *= z
            total += power / mp.mpf(n) ** s
            if abs(power) * radius / (1 - radius) < ctx.eps:
                return total

    @staticmethod
    def _li_log_series(s, mu, on_cut, upper, ctx):
        """Li_s(e^μ) = Σ_{k≠s-1} ζ(s-k) μ^k/k! + μ^(s-1)/(s-1)!·(H_{s-1} - log(-μ))"""
        mp = ctx.mp
        rho = abs(mu) / (2 * mp.pi)
        harmonic = mp.fsum(mp.mpf(1) / j for j in range(1, s))

        if on_cut:
            log_neg_mu = mp.mpc(mp.log(mu.real), -mp.pi if upper else mp.pi)
        else:
            log_neg_mu = mp.log(-mu)

        total = mu ** (s - 1) / mp.factorial(s - 1) * (harmonic - log_neg_mu)
        power = mp.mpc(1)
        factorial = mp.mpf(1)
        # |ζ(-n)| ≤ 4·n!/(2π)^(n+1): la cola decrece como ρ^n
        envelope = 4 * abs(mu) ** s / (2 * mp.pi) / (1 - rho)
        for k in range(0, 40 * ctx.dps):
            if k != s - 1:
                total += ZetaService.zeta_int(s - k, ctx) * power / factorial
            if k > s and envelope * rho ** (k - s) < ctx.eps:
                return total
            power *= mu
            factorial *= k + 1

        raise PrecisionUnreachableError("La serie en log z no convergió")

    @staticmethod
    def _li_inversion(s, z, on_cut, upper, ctx):
        """Li_s(z) = -(2πi)^s/s!·B_s(1/2 + log(-z)/(2πi)) - (-1)^s Li_s(1/z)"""
        mp = ctx.mp
        two_pi_i = mp.mpc(0, 2 * mp.pi)
        if on_cut:
            log_neg_z = mp.mpc(mp.log(z.real), -mp.pi if upper else mp.pi)
        else:
            log_neg_z = mp.log(-z)

        bernoulli = mp.bernpoly(s, mp.mpf(1) / 2 + log_neg_z / two_pi_i)
        reflected = PolylogService.li_value(s, 1 / z, CutSide.AUTO, ctx)
        return -(two_pi_i**s) / mp.factorial(s) * bernoulli - (-1) ** s * reflected

    # ---------------------------------------------------------- MPL

    @staticmethod
    def mpl_direct(spec, ctx):
        if not isinstance(spec, MplSpec):
            raise TypeError("El campo 'spec' debe ser de tipo 'MplSpec'.")

        if not spec.is_convergent(ctx):
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.mpl_direct.__name__}",
                    "message": f"Serie múltiple divergente {spec.to_text()}",
                }
            )
            raise DivergentError(f"La serie {spec.to_text()} no converge")

        args = [ConstantsService.point_value(a, ctx) for a in spec.args]
        return ApComplex.from_value(PolylogService.mpl_sum(spec.weights, args, ctx), ctx)

    @staticmethod
    def mpl_eval(spec, ctx):
        """Valor analítico: suma directa si converge rápido, si no vía G."""
        if not isinstance(spec, MplSpec):
            raise TypeError("El campo 'spec' debe ser de tipo 'MplSpec'.")
        args = [ConstantsService.point_value(a, ctx) for a in spec.args]
        return ApComplex.from_value(PolylogService.mpl_value(spec.weights, args, ctx), ctx)

    @staticmethod
    def mpl_value(weights, args, ctx):
        products = PolylogService._partial_products(args, ctx)
        if max(abs(p) for p in products) <= GPL_SERIES_THRESHOLD:
            return PolylogService.mpl_sum(weights, args, ctx)

        mp = ctx.mp
        letters = []
        alpha = mp.mpc(1)
        for s, arg in zip(weights, args):
            if arg == 0:
                raise DivergentError("Argumento nulo en un polilogaritmo múltiple")
            alpha = alpha / arg
            letters.extend([mp.mpc(0)] * (s - 1))
            letters.append(alpha)
        sign = (-1) ** len(weights)
        return sign * PolylogService.gpl_value(tuple(letters), mp.mpc(1), ctx)

    @staticmethod
    def _partial_products(args, ctx):
        products = []
        running = ctx.mp.mpc(1)
        for arg in args:
            running *= arg
            products.append(running)
        return products

    @staticmethod
    def mpl_sum(weights, args, ctx):
        """
        Σ_{n1>…>nm≥1} Π z_j^n_j / n_j^s_j. Con ρ = max|z1…zj| < 1 la cola se
        acota por (N+1)^(m-1) ρ^(N+1) / (1 - ρ(1+1/N)^(m-1)); con ρ = 1 se
        duplica N hasta que dos sumas parciales coincidan.
        """
        mp = ctx.mp
        depth = len(weights)
        rho = max(abs(p) for p in PolylogService._partial_products(args, ctx))
        slack = ctx.eps * 100

        if rho > 1 + slack or (weights[0] == 1 and abs(args[0] - 1) <= slack):
            raise DivergentError("La serie múltiple no converge")

        powers = [mp.mpc(1)] * depth
        prefixes = [mp.mpc(0)] * (depth + 1)
        prefixes[depth] = mp.mpc(1)
        total = mp.mpc(0)

        def advance(n):
            nonlocal total
            values = [None] * depth
            for j in range(depth - 1, -1, -1):
                powers[j] *= args[j]
                values[j] = powers[j] / mp.mpf(n) ** weights[j] * prefixes[j + 1]
            for j in range(depth):
                prefixes[j] += values[j]
            total += values[0]

        if rho < 1 - slack:
            n = 0
            while True:
                n += 1
                advance(n)
                if n % 8 == 0:
                    growth = (1 + mp.mpf(1) / n) ** (depth - 1)
                    if rho * growth < 1:
                        bound = (n + 1) ** (depth - 1) * rho ** (n + 1) / (1 - rho * growth)
                        if bound < ctx.eps:
                            return total
                if n > MPL_TERM_CAP * 8:
                    break
        else:
            n = 0
            limit = MPL_FIRST_BLOCK
            previous = None
            while limit <= MPL_TERM_CAP:
                while n < limit:
                    n += 1
                    advance(n)
                if previous is not None and abs(total - previous) <= ctx.tolerance * max(1, abs(total)):
                    return total
                previous = +total
                limit *= 2

        LogService.create_log(
            {
                "module": f"{PolylogService.__name__}.{PolylogService.mpl_sum.__name__}",
                "message": f"La suma anidada no alcanzó {ctx.digits} dígitos en {n} términos",
            }
        )
        raise PrecisionUnreachableError("La suma anidada no alcanzó la precisión pedida")

    # ---------------------------------------------------------- GPL

    @staticmethod
    def gpl_to_mpl(word):
        if not isinstance(word, GplWord):
            raise TypeError("El campo 'word' debe ser de tipo 'GplWord'.")
        if not word.letters or word.is_all_zero():
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.gpl_to_mpl.__name__}",
                    "message": f"Se pidió convertir una palabra nula {word.to_text()}",
                }
            )
            raise ValueError("Una palabra vacía o de solo ceros no tiene forma Li.")
        if word.has_trailing_zero():
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.gpl_to_mpl.__name__}",
                    "message": f"Se pidió convertir una palabra con ceros finales {word.to_text()}",
                }
            )
            raise ValueError("La palabra tiene ceros finales; primero hay que regularizarla.")

        weights = []
        nonzero = []
        zeros = 0
        for letter in word.letters:
            if is_zero_point(letter):
                zeros += 1
            else:
                weights.append(zeros + 1)
                nonzero.append(letter)
                zeros = 0

        args = [word.arg / nonzero[0]]
        args.extend(nonzero[j - 1] / nonzero[j] for j in range(1, len(nonzero)))
        sign = (-1) ** len(nonzero)
        return sign, MplSpec(tuple(weights), tuple(args))

    @staticmethod
    def mpl_to_gpl(spec, z):
        if not isinstance(spec, MplSpec):
            raise TypeError("El campo 'spec' debe ser de tipo 'MplSpec'.")
        if any(is_zero_point(a) for a in spec.args):
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.mpl_to_gpl.__name__}",
                    "message": f"Argumento nulo en {spec.to_text()}",
                }
            )
            raise ValueError("Los argumentos del polilogaritmo múltiple no pueden ser cero.")

        z = as_point(z)
        letters = []
        alpha = z
        for s, arg in zip(spec.weights, spec.args):
            alpha = alpha / arg
            letters.extend([0] * (s - 1))
            letters.append(alpha)
        return GplWord(tuple(letters), z)

    @staticmethod
    def gpl_eval(word, ctx):
        if not isinstance(word, GplWord):
            raise TypeError("El campo 'word' debe ser de tipo 'GplWord'.")

        letters = tuple(ConstantsService.point_value(a, ctx) for a in word.letters)
        z = ConstantsService.point_value(word.arg, ctx)
        try:
            value = PolylogService.gpl_value(letters, z, ctx)
        except EvaluationError as e:
            LogService.create_log(
                {
                    "module": f"{PolylogService.__name__}.{PolylogService.gpl_eval.__name__}",
                    "message": f"Error evaluando {word.to_text()}: {str(e)}",
                }
            )
            raise
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def gpl_value(letters, z, ctx, depth=0):
        mp = ctx.mp
        n = len(letters)
        if n == 0:
            return mp.mpc(1)

        if all(a == 0 for a in letters):
            if z == 0:
                raise DivergentError("G(0,…,0; 0) diverge")
            return mp.log(z) ** n / mp.factorial(n)

        if z == 0:
            return mp.mpc(0)

        first = letters[0]
        if first != 0 and abs(first - z) <= ctx.eps * 100 * abs(first):
            raise DivergentError("La primera letra coincide con el argumento")

        if letters[-1] == 0:
            combination = ShuffleService.remove_trailing_zeros(Word(letters))
            return PolylogService._evaluate_monomials(combination, z, ctx, depth)

        if n == 1:
            return mp.log(1 - z / letters[0])

        anchor = min((a for a in letters if a != 0), key=abs)
        if abs(z / anchor) <= GPL_SERIES_THRESHOLD:
            scaled = tuple(a / anchor for a in letters)
            return PolylogService._gpl_series(scaled, z / anchor, ctx)

        if depth < HOLDER_DEPTH:
            return PolylogService._holder(letters, z, ctx, depth + 1)
        return PolylogService._gpl_quadrature(letters, z, ctx, depth)

    @staticmethod
    def _gpl_series(letters, z, ctx):
        weights = []
        nonzero = []
        zeros = 0
        for letter in letters:
            if letter == 0:
                zeros += 1
            else:
                weights.append(zeros + 1)
                nonzero.append(letter)
                zeros = 0
        args = [z / nonzero[0]] + [nonzero[j - 1] / nonzero[j] for j in range(1, len(nonzero))]
        return (-1) ** len(nonzero) * PolylogService.mpl_sum(weights, args, ctx)

    @staticmethod
    def _holder(letters, z, ctx, depth):
        """
        G(b; 1) = Σ_j (-1)^j G(1-b_j, …, 1-b_1; 1-λ) G(b_{j+1}, …, b_n; λ)
        con b = α/z normalizado.
        """
        mp = ctx.mp
        normalized = tuple(a / z for a in letters)
        split = PolylogService._holder_split(normalized, ctx)
        one = mp.mpc(1)

        total = mp.mpc(0)
        n = len(normalized)
        for j in range(n + 1):
            left = tuple(one - normalized[i] for i in range(j - 1, -1, -1))
            right = normalized[j:]
            left_value = PolylogService.gpl_value(left, one - split, ctx, depth) if left else one
            if left_value == 0:
                continue
            right_value = PolylogService.gpl_value(right, split, ctx, depth) if right else one
            total += (-1) ** j * left_value * right_value
        return total

    @staticmethod
    def _holder_split(normalized, ctx):
        for candidate in HOLDER_SPLITS:
            split = ctx.convert(candidate)
            if all(abs(b - split) > HOLDER_CLEARANCE for b in normalized):
                return split
        return ctx.convert(HOLDER_SPLITS[0])

    @staticmethod
    def _gpl_quadrature(letters, z, ctx, depth):
        """Un nivel de G(a1, rest; z) = ∫_0^z G(rest; x)/(x - a1) dx por tanh-sinh."""
        first, rest = letters[0], letters[1:]
        ratio = first / z
        if abs(ratio.imag) <= ctx.eps * 100 and 0 < ratio.real < 1:
            raise DivergentError("Una letra cae sobre el segmento de integración")

        def integrand(x):
            return PolylogService.gpl_value(rest, x, ctx, depth) / (x - first)

        result = QuadratureService.integrate_segment(integrand, Segment(ctx.mp.mpc(0), z), ctx)
        return result.value.value

    @staticmethod
    def _evaluate_monomials(combination, z, ctx, depth=0, scalar=None):
        mp = ctx.mp
        log_z = mp.log(z)
        total = mp.mpc(0)
        for monomial, coeff in combination.items():
            value = PolylogService.gpl_value(monomial.word.letters, z, ctx, depth)
            if monomial.log_power:
                value *= log_z**monomial.log_power
            if monomial.scalar_power:
                value *= scalar**monomial.scalar_power
            total += ctx.convert(coeff) * value
        return total

    @staticmethod
    def evaluate_combination(combination, z, ctx, scalar=0):
        """Σ c·G(word; z)·log^m(z)·scalar^p"""
        numeric = WordCombination()
        for monomial, coeff in combination.items():
            letters = tuple(ConstantsService.point_value(as_point(a), ctx) for a in monomial.word.letters)
            numeric.add_term(monomial._replace(word=Word(letters)), coeff)

        z = ConstantsService.point_value(as_point(z), ctx)
        value = PolylogService._evaluate_monomials(numeric, z, ctx, scalar=ctx.mp.mpc(scalar))
        return ApComplex.from_value(value, ctx)
