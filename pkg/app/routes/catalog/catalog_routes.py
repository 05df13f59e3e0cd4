from flask import Blueprint, jsonify

from ...services.log.log_service import LogService
from ...services.verifier.catalog import catalog_hash
from ...services.verifier.verifier_service import VerifierService

catalog_bp = Blueprint("catalog", __name__, url_prefix="/catalog")


@catalog_bp.route("", methods=["GET"])
@catalog_bp.route("/", methods=["GET"])
def get_catalog():
    try:
        catalog = VerifierService.builtin_catalog()
        return (
            jsonify(
                {
                    "ok": True,
                    "catalog_hash": catalog_hash(catalog),
                    "identities": [identity.to_dict() for identity in catalog],
                }
            ),
            200,
        )

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{get_catalog.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500


@catalog_bp.route("/<identity_id>", methods=["GET"])
def get_identity(identity_id):
    try:
        identity = VerifierService.find_identity(identity_id)
        return jsonify({"ok": True, "identity": identity.to_dict(detailed=True)}), 200

    except ValueError as e:
        return jsonify({"ok": False, "error": str(e)}), 404

    except Exception as e:
        LogService.create_log(
            {
                "module": f"{__name__}.{get_identity.__name__}",
                "message": f"Exception error {str(e)}",
            }
        )
        return jsonify({"ok": False, "error": str(e)}), 500
