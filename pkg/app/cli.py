"""
Comandos de consola registrados en ``app.cli``.

    python run.py eval series 3 1 --digits 30
    python run.py const beta4
    python run.py verify all --digits 40 --jobs 8 --json report.json
    python run.py list
    python run.py export 1 corrida.xlsx
"""

import json

import click
from flask import current_app
from flask.cli import with_appcontext

from .models.config.cli_config import CliConfig
from .models.precision.precision import PrecisionCtx
from .models.report.verification_report import ReportStatus
from .services.evaluate.evaluate_service import EVAL_KINDS, EvaluateService
from .services.report.report_service import ReportService
from .services.verifier.verifier_service import VerifierService
from utils.decorators import EXIT_EVALUATION, EXIT_FAIL, EXIT_OK, cli_exit_codes

digits_option = click.option("--digits", type=int, default=None, help="Dígitos decimales reportados.")


def _context(cfg):
    return PrecisionCtx(digits=cfg.digits, guard=cfg.guard)


def _print_value(value, cfg):
    click.echo(value.to_string(cfg.digits))


@click.command("eval")
@click.argument("kind", type=click.Choice(EVAL_KINDS))
@click.argument("args", nargs=-1)
@digits_option
@with_appcontext
@cli_exit_codes
def eval_command(kind, args, digits):
    """Evalúa una serie, una constante, una función G o Li_s."""
    cfg = CliConfig.from_app(current_app, digits=digits)
    _print_value(EvaluateService.evaluate(kind, args, _context(cfg)), cfg)
    return EXIT_OK


@click.command("const")
@click.argument("name")
@digits_option
@with_appcontext
@cli_exit_codes
def const_command(name, digits):
    """Alias de 'eval const'."""
    cfg = CliConfig.from_app(current_app, digits=digits)
    _print_value(EvaluateService.evaluate("const", (name,), _context(cfg)), cfg)
    return EXIT_OK


@click.command("verify")
@click.argument("identity_id")
@digits_option
@click.option("--jobs", type=int, default=None, help="Procesos para 'all'.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--xlsx", "xlsx_path", type=click.Path(dir_okay=False), default=None)
@click.option("--save/--no-save", default=True, help="Guarda la corrida en la base de datos.")
@with_appcontext
@cli_exit_codes
def verify_command(identity_id, digits, jobs, json_path, xlsx_path, save):
    """Verifica una identidad del catálogo o todas ('all')."""
    cfg = CliConfig.from_app(current_app, digits=digits, jobs=jobs, output_path=json_path)
    ctx = _context(cfg)

    if identity_id == "all":
        reports = VerifierService.verify_all(ctx, workers=cfg.jobs)
    else:
        reports = [VerifierService.verify(VerifierService.find_identity(identity_id), ctx)]

    for report in reports:
        click.echo(
            f"{report.id:<14} {report.status.value:<6} {report.digits_agreed:>7.2f} / {report.min_digits:<3} "
            f"{report.anchor}"
        )
        if report.message:
            click.echo(f"{'':<14} {report.message}")

    if save:
        run = ReportService.save_run(reports, ctx)
        click.echo(f"corrida {run['id']}: {run['passed']}/{run['total']} aprobadas")

    if cfg.json:
        with open(cfg.output_path, "w", encoding="utf-8") as handle:
            json.dump(ReportService.build_document(reports, ctx), handle, indent=2, ensure_ascii=False)
            handle.write("\n")

    if xlsx_path:
        rows = [report.to_dict() for report in reports]
        with open(xlsx_path, "wb") as handle:
            handle.write(ReportService.export_workbook(rows).getvalue())

    statuses = {report.status for report in reports}
    if ReportStatus.ERROR in statuses:
        return EXIT_EVALUATION
    if ReportStatus.FAIL in statuses:
        return EXIT_FAIL
    return EXIT_OK


@click.command("list")
@with_appcontext
@cli_exit_codes
def list_command():
    """Lista las identidades del catálogo con su referencia."""
    for identity in VerifierService.builtin_catalog():
        level = "-" if identity.level is None else identity.level
        click.echo(f"{identity.id:<14} k={identity.weight} N={level:<3} {identity.anchor}")
    return EXIT_OK


@click.command("export")
@click.argument("run_id", type=int)
@click.argument("path", type=click.Path(dir_okay=False))
@with_appcontext
@cli_exit_codes
def export_command(run_id, path):
    """Exporta una corrida guardada a Excel."""
    run = ReportService.get_run_by_id(run_id)
    with open(path, "wb") as handle:
        handle.write(ReportService.export_workbook(run["records"], title=f"Corrida {run_id}").getvalue())
    click.echo(f"corrida {run_id} exportada a {path}")
    return EXIT_OK


def register_commands(app):
    for command in (eval_command, const_command, verify_command, list_command, export_command):
        app.cli.add_command(command)
