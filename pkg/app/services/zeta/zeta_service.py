from fractions import Fraction
from math import factorial
from numbers import Rational

from mpmath import bernfrac

from ...models.precision.precision import ApComplex
from ...services.log.log_service import LogService
from ...utils.errors import PrecisionUnreachableError

# Números de Bernoulli exactos B_n, compartidos por todo el proceso
_BERNOULLI = {}


class ZetaService:
    """Función zeta de Hurwitz por Euler–Maclaurin y caché de números de Bernoulli."""

    MAX_DOUBLINGS = 8

    @staticmethod
    def bernoulli(n):
        value = _BERNOULLI.get(n)
        if value is None:
            numerator, denominator = bernfrac(n)
            value = Fraction(int(numerator), int(denominator))
            _BERNOULLI[n] = value
        return value

    @staticmethod
    def warm_bernoulli_cache(max_index):
        """Se llama antes de repartir trabajo en paralelo (y en cada proceso de trabajo)."""
        for n in range(max_index + 1):
            ZetaService.bernoulli(n)
        return len(_BERNOULLI)

    @staticmethod
    def warm_index(ctx):
        return 4 * ctx.dps + 16

    @staticmethod
    def hurwitz_zeta(s, a, ctx):
        if not isinstance(s, int) or isinstance(s, bool) or s < 2:
            LogService.create_log(
                {
                    "module": f"{ZetaService.__name__}.{ZetaService.hurwitz_zeta.__name__}",
                    "message": f"Se pidió zeta de Hurwitz con s inválido: {s}",
                }
            )
            raise ValueError("El parámetro s debe ser un entero mayor o igual a 2.")

        if not isinstance(a, Rational) or isinstance(a, bool) or not 0 < a <= 1:
            LogService.create_log(
                {
                    "module": f"{ZetaService.__name__}.{ZetaService.hurwitz_zeta.__name__}",
                    "message": f"Se pidió zeta de Hurwitz con a fuera de (0, 1]: {a}",
                }
            )
            raise ValueError("El parámetro a debe ser un racional en (0, 1].")

        return ApComplex.from_value(ZetaService.zeta_value(s, Fraction(a), ctx), ctx)

    @staticmethod
    def zeta_value(s, a, ctx):
        key = ("hurwitz", s, a)
        if key not in ctx.memo:
            ctx.memo[key] = ZetaService._euler_maclaurin(s, a, ctx)
        return ctx.memo[key]

    @staticmethod
    def zeta_int(n, ctx):
        """ζ(n) para cualquier entero n ≠ 1."""
        if n >= 2:
            return ZetaService.zeta_value(n, Fraction(1), ctx)
        if n == 0:
            return ctx.mp.mpf(-1) / 2
        m = 1 - n
        return -ctx.convert(ZetaService.bernoulli(m) / m)

    @staticmethod
    def _euler_maclaurin(s, a, ctx):
        mp = ctx.mp
        shift = ctx.convert(a)
        cutoff = max(ctx.dps, 10)

        for _ in range(ZetaService.MAX_DOUBLINGS):
            head = mp.fsum((n + shift) ** (-s) for n in range(cutoff))
            target = ctx.eps * abs(head) / 10
            x = cutoff + shift
            tail = x ** (1 - s) / (s - 1) + x ** (-s) / 2

            # B_2j/(2j)! · s(s+1)…(s+2j-2) · x^(-s-2j+1)
            rising = mp.mpf(s)
            power = x ** (-s - 1)
            inverse_square = 1 / (x * x)
            previous = None
            for j in range(1, 4 * ctx.dps):
                coeff = ZetaService.bernoulli(2 * j) / factorial(2 * j)
                term = ctx.convert(coeff) * rising * power
                size = abs(term)
                if size <= target:
                    # el resto queda acotado por el primer término omitido
                    return head + tail + term
                if previous is not None and size > previous:
                    break
                tail += term
                previous = size
                rising *= (s + 2 * j - 1) * (s + 2 * j)
                power *= inverse_square

            cutoff *= 2

        LogService.create_log(
            {
                "module": f"{ZetaService.__name__}.{ZetaService._euler_maclaurin.__name__}",
                "message": f"Euler–Maclaurin no alcanzó {ctx.dps} dígitos para zeta({s}, {a})",
            }
        )
        raise PrecisionUnreachableError(f"No se alcanzó la precisión para zeta({s}, {a})")
