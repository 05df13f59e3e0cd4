from io import BytesIO

from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill

from ...database import db
from ...models.precision.precision import PrecisionCtx
from ...models.report.verification_run import VerificationRecord, VerificationRun
from ...services.log.log_service import LogService
from ...services.verifier.catalog import catalog_hash
from ...services.verifier.verifier_service import VerifierService

TOOL_VERSION = "1.0.0"

WORKBOOK_HEADERS = [
    ("Identidad", "id"),
    ("Estado", "status"),
    ("Dígitos", "digits_agreed"),
    ("Mínimo", "min_digits"),
    ("Diferencia", "abs_diff"),
    ("Precisión", "precision_used"),
    ("Referencia", "anchor"),
    ("Lado izquierdo", "lhs_value"),
    ("Lado derecho", "rhs_value"),
    ("Mensaje", "message"),
]


class ReportService:

    @staticmethod
    def build_document(reports, ctx, catalog=None):
        """
        Documento JSON estable: metadatos y reportes sin tiempos; los tiempos
        van en una sección aparte que no forma parte de la garantía de estabilidad.
        """
        return {
            "metadata": {
                "tool_version": TOOL_VERSION,
                "digits": ctx.digits,
                "catalog_hash": catalog_hash(catalog),
            },
            "reports": [report.stable_dict() for report in reports],
            "timing": {"elapsed_ms": {report.id: report.elapsed_ms for report in reports}},
        }

    @staticmethod
    def save_run(reports, ctx, trigger="manual"):
        run = VerificationRun(
            digits=ctx.digits,
            guard=ctx.guard,
            tool_version=TOOL_VERSION,
            catalog_hash=catalog_hash(),
            trigger=trigger,
            passed=sum(1 for report in reports if report.passed),
            total=len(reports),
        )
        for position, report in enumerate(reports):
            run.records.append(
                VerificationRecord(
                    position=position,
                    identity_id=report.id,
                    status=report.status.value,
                    lhs_value=report.lhs_value,
                    rhs_value=report.rhs_value,
                    abs_diff=report.abs_diff,
                    digits_agreed=report.digits_agreed,
                    precision_used=report.precision_used,
                    elapsed_ms=report.elapsed_ms,
                    anchor=report.anchor,
                    min_digits=report.min_digits,
                    message=report.message,
                )
            )

        db.session.add(run)
        db.session.commit()

        return run.to_dict(with_records=True)

    @staticmethod
    def get_all_runs():
        runs = VerificationRun.query.order_by(VerificationRun.id).all()
        return [run.to_dict() for run in runs]

    @staticmethod
    def get_run_by_id(id_run):
        run = VerificationRun.query.filter(VerificationRun.id == id_run).first()

        if run is None:
            LogService.create_log(
                {
                    "module": f"{ReportService.__name__}.{ReportService.get_run_by_id.__name__}",
                    "message": f"No se encontró la corrida de verificación {id_run}",
                }
            )
            raise ValueError("No se encontró la corrida de verificación")

        return run.to_dict(with_records=True)

    @staticmethod
    def export_workbook(rows, title="Verificación"):
        """
        Tabla de reproducción en Excel. ``rows`` son diccionarios de reporte
        (VerificationReport.to_dict o VerificationRecord.to_dict).
        """
        try:
            wb = Workbook()
            ws = wb.active
            ws.title = title[:31]

            header_font = Font(bold=True, color="FFFFFF", size=12)
            header_fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
            header_alignment = Alignment(horizontal="center", vertical="center")

            for col_num, (header, _) in enumerate(WORKBOOK_HEADERS, 1):
                cell = ws.cell(row=1, column=col_num)
                cell.value = header
                cell.font = header_font
                cell.fill = header_fill
                cell.alignment = header_alignment

            for row_num, row in enumerate(rows, 2):
                for col_num, (_, key) in enumerate(WORKBOOK_HEADERS, 1):
                    value = row.get(key, "")
                    ws.cell(row=row_num, column=col_num, value=getattr(value, "value", value))

            for column in ws.columns:
                max_length = max(len(str(cell.value)) for cell in column if cell.value is not None)
                ws.column_dimensions[column[0].column_letter].width = min(max_length + 2, 50)

            excel_file = BytesIO()
            wb.save(excel_file)
            excel_file.seek(0)

            return excel_file

        except Exception as e:
            LogService.create_log(
                {
                    "module": f"{ReportService.__name__}.{ReportService.export_workbook.__name__}",
                    "message": f"Error al generar el reporte Excel: {str(e)}",
                }
            )
            raise e

    @staticmethod
    def run_scheduled_sweep(app):
        """Barrido diario del catálogo, guardado como corrida 'scheduled'."""
        with app.app_context():
            ctx = PrecisionCtx(
                digits=app.config["VERIFY_SCHEDULE_DIGITS"],
                guard=app.config["INVBINOM_GUARD"],
            )
            reports = VerifierService.verify_all(ctx, workers=app.config["INVBINOM_JOBS"])
            run = ReportService.save_run(reports, ctx, trigger="scheduled")
            print(f"[APScheduler] Verificación programada: {run['passed']}/{run['total']} identidades aprobadas")
            return run
