from ...models.polylog.polylog import MAX_WEIGHT, GplWord
from ...models.series.series import SeriesSpec
from ...services.constants.constants_service import ConstantsService
from ...services.log.log_service import LogService
from ...services.polylog.polylog_service import PolylogService
from ...services.series.binomial_series_service import BinomialSeriesService
from ...utils.validator import parse_constant, parse_int, parse_letters, parse_point

EVAL_KINDS = ("series", "const", "gpl", "li")

_ARITY = {"series": 2, "const": 1, "gpl": 2, "li": 2}


class EvaluateService:
    """Despacho de 'eval <kind> <args...>' compartido por la consola y la API."""

    @staticmethod
    def evaluate(kind, args, ctx):
        if kind not in EVAL_KINDS:
            LogService.create_log(
                {
                    "module": f"{EvaluateService.__name__}.{EvaluateService.evaluate.__name__}",
                    "message": f"Tipo de evaluación desconocido: '{kind}'",
                }
            )
            raise ValueError(f"El tipo de evaluación debe ser uno de: {', '.join(EVAL_KINDS)}.")

        args = tuple(args)
        if len(args) != _ARITY[kind]:
            raise ValueError(f"'{kind}' espera {_ARITY[kind]} argumento(s) y recibió {len(args)}.")

        if kind == "series":
            spec = SeriesSpec(parse_int(args[0], "k", minimum=0), parse_point(args[1]))
            return BinomialSeriesService.s_series(spec, ctx)
        if kind == "const":
            return ConstantsService.named_constant(parse_constant(args[0]), ctx)
        if kind == "gpl":
            return PolylogService.gpl_eval(GplWord(parse_letters(args[0]), parse_point(args[1])), ctx)
        return PolylogService.li(parse_int(args[0], "s", minimum=1, maximum=MAX_WEIGHT), parse_point(args[1]), ctx=ctx)
