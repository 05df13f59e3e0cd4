import time
from concurrent.futures import ProcessPoolExecutor

from ...models.identity.identity import (
    ChudnovskyTerm,
    ContourTerm,
    ExprTerm,
    F32Term,
    SeriesTerm,
)
from ...models.precision.precision import PrecisionCtx
from ...models.report.verification_report import ReportStatus, VerificationReport
from ...models.series.series import SeriesSpec
from ...services.constants.constants_service import ConstantsService
from ...services.log.log_service import LogService
from ...services.quadrature.contour_service import ContourService
from ...services.series.binomial_series_service import BinomialSeriesService
from ...services.verifier.catalog import builtin_catalog
from ...services.zeta.zeta_service import ZetaService
from ...utils.errors import EvaluationError
from utils.decorators import retry_with_more_guard

# Margen entre los dígitos pedidos y el umbral de aprobación
PASS_MARGIN = 5


def _warm_worker(dps):
    ZetaService.warm_bernoulli_cache(ZetaService.warm_index(PrecisionCtx(digits=max(dps, 10), guard=0)))


def _verify_in_worker(job):
    identity, digits, guard = job
    return VerifierService.verify(identity, PrecisionCtx(digits=digits, guard=guard))


class VerifierService:

    @staticmethod
    def builtin_catalog():
        return builtin_catalog()

    @staticmethod
    def find_identity(identity_id, catalog=None):
        catalog = builtin_catalog() if catalog is None else catalog
        for identity in catalog:
            if identity.id == identity_id:
                return identity

        LogService.create_log(
            {
                "module": f"{VerifierService.__name__}.{VerifierService.find_identity.__name__}",
                "message": f"Se pidió una identidad inexistente: '{identity_id}'",
            }
        )
        raise ValueError(f"La identidad '{identity_id}' no existe en el catálogo.")

    @staticmethod
    def threshold(identity, ctx):
        return min(identity.min_digits, ctx.digits - PASS_MARGIN)

    @staticmethod
    def digits_agreed(lhs, rhs, ctx):
        """-log10(|lhs - rhs| / max(1, |rhs|)), acotado por la precisión de trabajo."""
        mp = ctx.mp
        relative = abs(lhs - rhs) / max(1, abs(rhs))
        if relative == 0:
            return float(ctx.dps)
        return round(float(min(ctx.dps, -mp.log10(relative))), 2)

    @staticmethod
    def evaluate_lhs(lhs, ctx):
        mp = ctx.mp
        if isinstance(lhs, SeriesTerm):
            factor = ConstantsService.evaluate(lhs.factor, ctx)
            return factor * BinomialSeriesService.s_series(SeriesSpec(lhs.k, lhs.z), ctx).value
        if isinstance(lhs, ContourTerm):
            factor = ConstantsService.evaluate(lhs.factor, ctx)
            return factor * ContourService.genchen_contour(lhs.k, lhs.w, ctx).value
        if isinstance(lhs, ExprTerm):
            return ConstantsService.eval_expr(lhs.expr, ctx).value
        if isinstance(lhs, ChudnovskyTerm):
            return mp.mpc(BinomialSeriesService.chudnovsky_series(ctx).value)
        if isinstance(lhs, F32Term):
            return BinomialSeriesService.f32_lhs(lhs.w, ctx).value
        raise TypeError(f"Lado izquierdo desconocido: {type(lhs).__name__}")

    @staticmethod
    @retry_with_more_guard()
    def _evaluate_sides(identity, ctx):
        if identity.is_family:
            return VerifierService._worst_theorem3_sample(identity, ctx) + (ctx,)
        lhs = VerifierService.evaluate_lhs(identity.lhs, ctx)
        rhs = ConstantsService.eval_expr(identity.rhs, ctx).value
        return lhs, rhs, "", ctx

    @staticmethod
    def _worst_theorem3_sample(identity, ctx):
        worst = None
        family = identity.lhs
        for param in BinomialSeriesService.theorem3_samples(family.count, family.seed):
            lhs = BinomialSeriesService.theorem3_lhs(param, ctx).value
            rhs = BinomialSeriesService.theorem3_rhs(param, ctx).value
            agreed = VerifierService.digits_agreed(lhs, rhs, ctx)
            if worst is None or agreed < worst[0]:
                worst = (agreed, lhs, rhs, f"peor muestra {param.to_text()}")
        return worst[1:]

    @staticmethod
    def verify(identity, ctx):
        mp = ctx.mp
        start = time.perf_counter()
        threshold = VerifierService.threshold(identity, ctx)

        def report(status, **values):
            return VerificationReport(
                id=identity.id,
                status=status,
                elapsed_ms=int((time.perf_counter() - start) * 1000),
                anchor=identity.anchor,
                weight=identity.weight,
                level=identity.level,
                min_digits=threshold,
                **values,
            )

        try:
            lhs, rhs, message, used = VerifierService._evaluate_sides(identity, ctx=ctx)
        except EvaluationError as e:
            LogService.create_log(
                {
                    "module": f"{VerifierService.__name__}.{VerifierService.verify.__name__}",
                    "message": f"Error verificando '{identity.id}': {e}",
                }
            )
            return report(
                ReportStatus.ERROR,
                lhs_value="",
                rhs_value="",
                abs_diff="",
                digits_agreed=0.0,
                precision_used=ctx.dps,
                message=str(e),
            )

        agreed = VerifierService.digits_agreed(lhs, rhs, used)
        status = ReportStatus.PASS if agreed >= threshold else ReportStatus.FAIL
        return report(
            status,
            lhs_value=mp.nstr(lhs, ctx.digits),
            rhs_value=mp.nstr(rhs, ctx.digits),
            abs_diff=mp.nstr(abs(lhs - rhs), 5),
            digits_agreed=agreed,
            precision_used=used.dps,
            message=message,
        )

    @staticmethod
    def verify_all(ctx, workers=1, catalog=None):
        """Verifica el catálogo completo; el orden de los reportes es el del catálogo."""
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            raise ValueError("El número de procesos debe ser al menos 1.")
        catalog = builtin_catalog() if catalog is None else list(catalog)
        if not catalog:
            return []

        if workers == 1:
            return [VerifierService.verify(identity, ctx) for identity in catalog]

        jobs = [(identity, ctx.digits, ctx.guard) for identity in catalog]
        with ProcessPoolExecutor(max_workers=workers, initializer=_warm_worker, initargs=(ctx.dps,)) as pool:
            return list(pool.map(_verify_in_worker, jobs))
