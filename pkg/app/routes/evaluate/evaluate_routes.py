from flask import Blueprint, current_app, jsonify, request

from ...models.precision.precision import PrecisionCtx
from ...services.evaluate.evaluate_service import EvaluateService
from ...services.log.log_service import LogService
from ...utils.errors import EvaluationError
from ...utils.validator import validate_digits

evaluate_bp = Blueprint("evaluate", __name__, url_prefix="/eval")

# Parámetros de consulta de cada tipo, en el orden de la consola
QUERY_ARGS = {
    "series": ("k", "z"),
    "const": ("name",),
    "gpl": ("letters", "z"),
    "li": ("s", "z"),
}


@evaluate_bp.route("/<kind>", methods=["GET"])
def evaluate(kind):
    try:
        if kind not in QUERY_ARGS:
            return jsonify({"ok": False, "error": f"Tipo de evaluación desconocido: '{kind}'"}), 404

        digits = validate_digits(request.args.get("digits", current_app.config["INVBINOM_DIGITS"]))
        ctx = PrecisionCtx(digits=digits, guard=current_app.config["INVBINOM_GUARD"])
        args = []
        for name in QUERY_ARGS[kind]:
            if name not in request.args:
                return jsonify({"ok": False, "error": f"Falta el parámetro '{name}'"}), 400
            args.append(request.args[name])

        value = EvaluateService.evaluate(kind, args, ctx)
        return (
            jsonify({"ok": True, "kind": kind, "text": value.to_string(digits), "value": value.to_dict()}),
            200,
        )

    except (ValueError, TypeError) as e:
        return jsonify({"ok": False, "error": str(e)}), 400

    except EvaluationError as e:
        return jsonify({"ok": False, "error": str(e)}), 422

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{evaluate.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500
