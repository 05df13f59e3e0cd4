import os
from flask_sqlalchemy import SQLAlchemy
from dotenv import load_dotenv

db = SQLAlchemy()


def init_db(app, overrides=None):
    load_dotenv()

    overrides = overrides or {}
    uri = overrides.get("DATABASE_URI", os.getenv("DATABASE_URI", "sqlite:///:memory:"))

    app.config["SQLALCHEMY_DATABASE_URI"] = uri
    app.config["SQLALCHEMY_TRACK_MODIFICATIONS"] = False

    # Opciones de pool solo para servidores de base de datos
    if not uri.startswith("sqlite"):
        app.config["SQLALCHEMY_ENGINE_OPTIONS"] = {
            "pool_pre_ping": True,  # chequea que la conexión siga viva antes de usarla
            "pool_recycle": 280,  # recicla conexiones antes del timeout del servidor
            "pool_timeout": 30,
            "pool_size": 5,
            "max_overflow": 10,
        }

    db.init_app(app)
