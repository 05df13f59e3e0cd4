import pytest
from openpyxl import load_workbook

from app.models.report.verification_report import ReportStatus, VerificationReport
from app.services.report.report_service import TOOL_VERSION, WORKBOOK_HEADERS, ReportService
from app.services.verifier.catalog import catalog_hash
from app.services.verifier.verifier_service import VerifierService


def make_report(identity_id, status=ReportStatus.PASS, elapsed_ms=12):
    return VerificationReport(
        id=identity_id,
        status=status,
        lhs_value="1.0200067",
        rhs_value="1.0200067",
        abs_diff="1.0e-30",
        digits_agreed=29.5,
        precision_used=30,
        elapsed_ms=elapsed_ms,
        anchor="S3(1)",
        weight=3,
        level=12,
        min_digits=15,
    )


def test_build_document_separates_timing(ctx20):
    reports = [make_report("a"), make_report("b", ReportStatus.FAIL, elapsed_ms=40)]
    document = ReportService.build_document(reports, ctx20)
    assert document["metadata"] == {
        "tool_version": TOOL_VERSION,
        "digits": 20,
        "catalog_hash": catalog_hash(),
    }
    assert [r["status"] for r in document["reports"]] == ["pass", "fail"]
    assert all("elapsed_ms" not in r for r in document["reports"])
    assert document["timing"]["elapsed_ms"] == {"a": 12, "b": 40}


def test_build_document_is_stable_across_timings(ctx20):
    first = ReportService.build_document([make_report("a", elapsed_ms=1)], ctx20)
    second = ReportService.build_document([make_report("a", elapsed_ms=999)], ctx20)
    assert first["reports"] == second["reports"]
    assert first["metadata"] == second["metadata"]


def test_save_and_read_runs(app, ctx20):
    saved = ReportService.save_run([make_report("a"), make_report("b", ReportStatus.ERROR)], ctx20)
    assert saved["passed"] == 1
    assert saved["total"] == 2
    assert [r["id"] for r in saved["records"]] == ["a", "b"]

    assert [run["id"] for run in ReportService.get_all_runs()] == [saved["id"]]
    assert ReportService.get_run_by_id(saved["id"])["records"][1]["status"] == "error"


def test_missing_run(app):
    with pytest.raises(ValueError):
        ReportService.get_run_by_id(123)


def test_export_workbook():
    rows = [make_report("a").to_dict(), make_report("b", ReportStatus.FAIL).to_dict()]
    sheet = load_workbook(ReportService.export_workbook(rows, title="Prueba")).active
    assert sheet.title == "Prueba"
    assert [cell.value for cell in sheet[1]] == [header for header, _ in WORKBOOK_HEADERS]
    assert sheet.cell(row=3, column=1).value == "b"
    assert sheet.cell(row=3, column=2).value == "fail"


def test_scheduled_sweep_saves_a_run(app, monkeypatch):
    monkeypatch.setattr(VerifierService, "verify_all", staticmethod(lambda ctx, workers=1: [make_report("a")]))
    app.config["VERIFY_SCHEDULE_DIGITS"] = 20
    run = ReportService.run_scheduled_sweep(app)
    assert run["trigger"] == "scheduled"
    assert run["digits"] == 20
    assert run["passed"] == 1
