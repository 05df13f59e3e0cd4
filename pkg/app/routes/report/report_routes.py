from flask import Blueprint, jsonify, send_file

from ...services.log.log_service import LogService
from ...services.report.report_service import ReportService

report_bp = Blueprint("report", __name__, url_prefix="/reports")


@report_bp.route("", methods=["GET"])
@report_bp.route("/", methods=["GET"])
def get_runs():
    try:
        runs = ReportService.get_all_runs()
        return jsonify({"ok": True, "runs": runs}), 200

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{get_runs.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500


@report_bp.route("/<int:id_run>", methods=["GET"])
def get_run(id_run):
    try:
        if id_run <= 0:
            return jsonify({"ok": False, "error": "El id ingresado debe ser positivo"}), 400

        run = ReportService.get_run_by_id(id_run)
        return jsonify({"ok": True, "run": run}), 200

    except ValueError as e:
        return jsonify({"ok": False, "error": str(e)}), 404

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{get_run.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500


@report_bp.route("/<int:id_run>/export", methods=["GET"])
def download_run(id_run):
    try:
        run = ReportService.get_run_by_id(id_run)
        excel_file = ReportService.export_workbook(run["records"], title=f"Corrida {id_run}")

        return send_file(
            excel_file,
            mimetype="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
            as_attachment=True,
            download_name=f"verificacion_{id_run}.xlsx",
        )

    except ValueError as e:
        return jsonify({"ok": False, "error": str(e)}), 404

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{download_run.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500
