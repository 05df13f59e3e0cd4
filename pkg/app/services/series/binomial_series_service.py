"""
Series binomiales inversas S_k(z) = Σ z^n / ((2n+1)^k C(2n,n)).

Los términos se generan con el cociente t_{n+1}/t_n, nunca con factoriales.
Para |z| ≤ 3.5 se suma directamente; más cerca del borde |z| = 4 se usa la
representación de contorno o la integral beta.
"""

import random
from fractions import Fraction

from ...models.expression.constant_expr import Rat, exp_i_pi
from ...models.precision.precision import ApComplex
from ...models.series.series import SeriesSpec, Theorem3Param
from ...services.constants.constants_service import ConstantsService
from ...services.log.log_service import LogService
from ...services.polylog.polylog_service import PolylogService
from ...services.quadrature.contour_service import MAX_CONTOUR_K, ContourService
from ...utils.cut_side import CutSide
from ...utils.errors import DivergentError, DomainError, PoleError, PrecisionUnreachableError

DIRECT_RADIUS = 3.5
CONVERGENCE_RADIUS = 4
TERM_CAP = 10**6
MIN_CONTOUR_REAL = 1e-3


class BinomialSeriesService:

    @staticmethod
    def s_series(spec, ctx):
        if not isinstance(spec, SeriesSpec):
            raise TypeError("El campo 'spec' debe ser de tipo 'SeriesSpec'.")
        z = ConstantsService.point_value(spec.z, ctx)
        return ApComplex.from_value(BinomialSeriesService.series_value(spec.k, z, ctx), ctx)

    @staticmethod
    def series_value(k, z, ctx):
        mp = ctx.mp
        z = mp.mpc(z)
        if z == 0:
            return mp.mpc(1)

        radius = abs(z)
        at_boundary = abs(radius - CONVERGENCE_RADIUS) <= ctx.eps * 10
        if radius > CONVERGENCE_RADIUS and not at_boundary:
            LogService.create_log(
                {
                    "module": f"{BinomialSeriesService.__name__}.{BinomialSeriesService.series_value.__name__}",
                    "message": f"S_{k}(z) diverge para |z| = {mp.nstr(radius, 10)} > 4",
                }
            )
            raise DivergentError("La serie S_k(z) diverge para |z| > 4")
        if at_boundary and k <= 1:
            raise DivergentError("Con |z| = 4 la serie solo converge para k ≥ 2")

        if radius <= DIRECT_RADIUS or k <= 1 or k > MAX_CONTOUR_K + 1:
            return BinomialSeriesService._direct_sum(k, z, ctx)
        return BinomialSeriesService._boundary_value(k, z, ctx)

    @staticmethod
    def _direct_sum(k, z, ctx):
        mp = ctx.mp
        term = mp.mpc(1)
        total = mp.mpc(1)
        radius = abs(z)
        for n in range(TERM_CAP):
            odd = 2 * n + 1
            term *= z * (n + 1) / (2 * odd) * (mp.mpf(odd) / (odd + 2)) ** k
            total += term
            # |t_{m+1}/t_m| ≤ |z|(m+1)/(4m+2), que decrece con m
            rho = radius * (n + 2) / (4 * n + 6)
            if rho < 1 and abs(term) * rho / (1 - rho) <= ctx.eps * max(abs(total), ctx.eps):
                return total

        LogService.create_log(
            {
                "module": f"{BinomialSeriesService.__name__}.{BinomialSeriesService._direct_sum.__name__}",
                "message": f"S_{k}(z) no alcanzó la precisión en {TERM_CAP} términos",
            }
        )
        raise PrecisionUnreachableError("La suma directa no alcanzó la precisión pedida")

    @staticmethod
    def _boundary_value(k, z, ctx):
        """3.5 < |z| ≤ 4: contorno con el w admisible de módulo ≤ 1, si no la integral beta."""
        mp = ctx.mp
        w, x = BinomialSeriesService.contour_parameter(z, ctx)
        if w is not None:
            return ContourService.genchen_contour(k, w, ctx).value / x

        y = mp.sqrt(z)
        return ContourService.beta_integral(k, y, ctx).value / y

    @staticmethod
    def contour_parameter(z, ctx):
        """(w, x) con (1-w²)/w = x, x² = -z, Re w > 0 y |w| ≤ 1; (None, None) si no existe."""
        mp = ctx.mp
        root = mp.sqrt(-mp.mpc(z))
        for x in (root, -root):
            discriminant = mp.sqrt(x * x + 4)
            for w in ((-x + discriminant) / 2, (-x - discriminant) / 2):
                if w.real > MIN_CONTOUR_REAL and abs(w) <= 1 + ctx.tolerance:
                    return w, x
        return None, None

    @staticmethod
    def odd_series(k, x, ctx, alternating=False):
        """
        f_k(x) = Σ x^(2n+1) / ((2n+1)^k C(2n,n)), o con signo (-1)^n si
        ``alternating``. Fuera de |x| ≤ 2 se continúa con la integral beta.
        """
        mp = ctx.mp
        x = ConstantsService.point_value(x, ctx)
        if x == 0:
            return ApComplex.from_value(0, ctx)

        z = -x * x if alternating else x * x
        if abs(z) <= CONVERGENCE_RADIUS or k <= 1:
            value = x * BinomialSeriesService.series_value(k, z, ctx)
        elif alternating:
            value = mp.mpc(0, 1) * ContourService.beta_integral(k, mp.mpc(0, -1) * x, ctx).value
        else:
            value = ContourService.beta_integral(k, x, ctx).value
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def s1_closed(z, ctx):
        """S_1(z) = 4 arcsin(√z/2) / (√z·√(4-z))"""
        mp = ctx.mp
        z = BinomialSeriesService._closed_form_point(z, BinomialSeriesService.s1_closed.__name__, ctx)
        if z == 0:
            return ApComplex.from_value(1, ctx)
        root = mp.sqrt(z)
        value = 4 * mp.asin(root / 2) / (root * mp.sqrt(4 - z))
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def s0_closed(z, ctx):
        """S_0(z) = 4(√(4-z) + √z·arcsin(√z/2)) / (4-z)^(3/2)"""
        mp = ctx.mp
        z = BinomialSeriesService._closed_form_point(z, BinomialSeriesService.s0_closed.__name__, ctx)
        rest = mp.sqrt(4 - z)
        root = mp.sqrt(z)
        value = 4 * (rest + root * mp.asin(root / 2)) / (rest * (4 - z))
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def _closed_form_point(z, operation, ctx):
        z = ConstantsService.point_value(z, ctx)
        if z == 4:
            LogService.create_log(
                {
                    "module": f"{BinomialSeriesService.__name__}.{operation}",
                    "message": "Forma cerrada evaluada en su polo z = 4",
                }
            )
            raise PoleError("Las formas cerradas de S_1 y S_0 tienen un polo en z = 4")
        if z.imag == 0 and z.real > 4:
            raise DomainError("z no puede estar sobre el corte [4, ∞)")
        return z

    @staticmethod
    def validate_theorem3_param(p, ctx):
        if not isinstance(p, Theorem3Param):
            raise TypeError("El campo 'p' debe ser de tipo 'Theorem3Param'.")
        mp = ctx.mp
        w = ConstantsService.point_value(p.w, ctx)
        slack = ctx.eps * 100
        admissible = (
            w != 0
            and abs(w) <= 1 + slack
            and w.real > 0
            and w.imag >= -slack
            and abs(1 - w * w) <= 2 * abs(w) + slack
        )
        if not admissible:
            LogService.create_log(
                {
                    "module": f"{BinomialSeriesService.__name__}.{BinomialSeriesService.validate_theorem3_param.__name__}",
                    "message": f"Parámetro fuera del dominio: w = {mp.nstr(w, 15)}",
                }
            )
            raise DomainError("w debe cumplir |w| ≤ 1, Re w > 0, Im w ≥ 0 y |1-w²| ≤ 2|w|")
        return w

    @staticmethod
    def theorem3_lhs(p, ctx):
        w = BinomialSeriesService.validate_theorem3_param(p, ctx)
        x = (1 - w * w) / w
        return BinomialSeriesService.odd_series(3, x, ctx, alternating=True)

    @staticmethod
    def theorem3_rhs(p, ctx):
        """
        -2[Li3(a1) - Li3(a2) - Li3(a3) + Li3(a4)] + [Li2(a1) - Li2(a2) + Li2(a3) - Li2(a4)]·log w
        + iπ·log(a1)·log(a3), con a1,2 = (1 ± w)/2 y a3,4 = (1 ± 1/w)/2.
        Para w real se toma el límite Im w → 0⁺.
        """
        mp = ctx.mp
        w = BinomialSeriesService.validate_theorem3_param(p, ctx)
        inverse = 1 / w
        points = (
            ((1 + w) / 2, CutSide.UPPER),
            ((1 - w) / 2, CutSide.LOWER),
            ((1 + inverse) / 2, CutSide.LOWER),
            ((1 - inverse) / 2, CutSide.UPPER),
        )

        def li(s, index):
            point, side = points[index]
            return PolylogService.li_value(s, point, side, ctx)

        trilog = li(3, 0) - li(3, 1) - li(3, 2) + li(3, 3)
        dilog = li(2, 0) - li(2, 1) + li(2, 2) - li(2, 3)
        a1, a3 = points[0][0], points[2][0]
        value = -2 * trilog + dilog * mp.log(w) + mp.mpc(0, mp.pi) * mp.log(a1) * mp.log(a3)
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def theorem3_samples(count=20, seed=0x5EED):
        """Parámetros exactos: 3 reales, 3 de módulo 1 y el resto en el interior del dominio."""
        rng = random.Random(seed)
        samples = []

        for _ in range(min(3, count)):
            samples.append(Theorem3Param(Rat(Fraction(f"{rng.uniform(0.45, 0.99):.6f}"))))

        for _ in range(min(3, count - len(samples))):
            samples.append(Theorem3Param(exp_i_pi(Fraction(rng.randint(2, 27), 60))))

        while len(samples) < count:
            re = Fraction(f"{rng.uniform(0.05, 1.0):.6f}")
            im = Fraction(f"{rng.uniform(0.0, 1.0):.6f}")
            w = complex(re, im)
            if abs(w) < 0.98 and abs(1 - w * w) <= 1.96 * abs(w):
                samples.append(Theorem3Param(Rat(re, im)))

        return samples

    @staticmethod
    def f32_lhs(w, ctx):
        """x·3F2(1/2,1,1; 3/2,3/2; -x²/4) con x = (1-w²)/w."""
        w = BinomialSeriesService._f32_point(w, ctx)
        x = (1 - w * w) / w
        return BinomialSeriesService.odd_series(2, x, ctx, alternating=True)

    @staticmethod
    def f32_rhs(w, ctx):
        """-2[Li2(w) - Li2(-w)] - 2 log w·log((1-w)/(1+w)) + π²/2"""
        mp = ctx.mp
        w = BinomialSeriesService._f32_point(w, ctx)
        dilog = PolylogService.li_value(2, w, CutSide.AUTO, ctx) - PolylogService.li_value(2, -w, CutSide.AUTO, ctx)
        value = -2 * dilog - 2 * mp.log(w) * mp.log((1 - w) / (1 + w)) + mp.pi**2 / 2
        return ApComplex.from_value(value, ctx)

    @staticmethod
    def _f32_point(w, ctx):
        w = ConstantsService.point_value(w, ctx)
        if w.imag != 0 or not 0 < w.real < 1:
            raise DomainError("La reducción a 3F2 solo vale para 0 < w < 1")
        return w

    @staticmethod
    def chudnovsky_series(ctx):
        """Σ_{n≥1} 1 / (n³ C(3n,n) 2^n)"""
        mp = ctx.mp
        # el cociente entre términos crece hacia 2/27 sin alcanzarlo
        rho = mp.mpf(2) / 27
        term = mp.mpf(1) / 6
        total = term
        n = 1
        while True:
            factor = mp.mpf((2 * n + 2) * (2 * n + 1)) / (6 * (3 * n + 2) * (3 * n + 1))
            term *= (mp.mpf(n) / (n + 1)) ** 3 * factor
            total += term
            n += 1
            if term * rho / (1 - rho) <= ctx.eps * total:
                return ApComplex.from_value(total, ctx)
