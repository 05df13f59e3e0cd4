from flask import Flask
from .database import init_db, db
from .precision_config import init_precision
from .cli import register_commands
from apscheduler.schedulers.background import BackgroundScheduler
from apscheduler.triggers.cron import CronTrigger
import atexit

# Importar todos los modelos para que SQLAlchemy los reconozca
from .models import *

# Importar los Blueprints
from .routes.catalog.catalog_routes import catalog_bp
from .routes.evaluate.evaluate_routes import evaluate_bp
from .routes.verify.verify_routes import verify_bp
from .routes.report.report_routes import report_bp
from .routes.log.log_routes import log_bp


def create_app(config=None):
    app = Flask(__name__)
    config = dict(config or {})

    init_db(app, config)
    init_precision(app, config)
    app.config.update({key: value for key, value in config.items() if key in ("TESTING",)})

    # Registrar blueprints
    app.register_blueprint(catalog_bp)
    app.register_blueprint(evaluate_bp)
    app.register_blueprint(verify_bp)
    app.register_blueprint(report_bp)
    app.register_blueprint(log_bp)

    register_commands(app)

    with app.app_context():
        db.create_all()

    if app.config["VERIFY_SCHEDULE_ENABLED"]:
        # Configurar APScheduler para la verificación diaria del catálogo
        scheduler = BackgroundScheduler()

        from .services.report.report_service import ReportService

        scheduler.add_job(
            func=lambda: ReportService.run_scheduled_sweep(app),
            trigger=CronTrigger(hour=app.config["VERIFY_SCHEDULE_HOUR"], minute=0),
            id="verify_catalog",
            name="Verificar el catálogo de identidades diariamente",
            replace_existing=True,
        )

        scheduler.start()
        print(
            f"[APScheduler] Scheduler iniciado - Verificación del catálogo programada para las "
            f"{app.config['VERIFY_SCHEDULE_HOUR']}:00 diariamente"
        )

        # Asegurar que el scheduler se detenga cuando la aplicación se cierre
        atexit.register(lambda: scheduler.shutdown())

    return app
