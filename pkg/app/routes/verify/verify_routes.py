from flask import Blueprint, current_app, jsonify, request

from ...models.precision.precision import PrecisionCtx
from ...services.log.log_service import LogService
from ...services.report.report_service import ReportService
from ...services.verifier.verifier_service import VerifierService
from ...utils.validator import parse_int, validate_digits

verify_bp = Blueprint("verify", __name__, url_prefix="/verify")


def _context(data):
    digits = validate_digits(data.get("digits", current_app.config["INVBINOM_DIGITS"]))
    return PrecisionCtx(digits=digits, guard=current_app.config["INVBINOM_GUARD"])


@verify_bp.route("/all", methods=["POST"])
def verify_all():
    try:
        data = request.get_json(silent=True) or {}
        ctx = _context(data)
        jobs = parse_int(data.get("jobs", current_app.config["INVBINOM_JOBS"]), "jobs", minimum=1)

        reports = VerifierService.verify_all(ctx, workers=jobs)
        run = ReportService.save_run(reports, ctx)
        document = ReportService.build_document(reports, ctx)
        return jsonify({"ok": all(r.passed for r in reports), "run_id": run["id"], **document}), 200

    except (ValueError, TypeError) as e:
        return jsonify({"ok": False, "error": str(e)}), 400

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{verify_all.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500


@verify_bp.route("/<identity_id>", methods=["POST"])
def verify_identity(identity_id):
    try:
        identity = VerifierService.find_identity(identity_id)
    except ValueError as e:
        return jsonify({"ok": False, "error": str(e)}), 404

    try:
        data = request.get_json(silent=True) or {}
        ctx = _context(data)

        report = VerifierService.verify(identity, ctx)
        run = ReportService.save_run([report], ctx)
        return jsonify({"ok": report.passed, "run_id": run["id"], "report": report.to_dict()}), 200

    except (ValueError, TypeError) as e:
        return jsonify({"ok": False, "error": str(e)}), 400

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{verify_identity.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500
