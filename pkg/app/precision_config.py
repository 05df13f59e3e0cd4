import os
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name, default):
    return os.getenv(name, default).lower() == "true"


def init_precision(app, overrides=None):

    app.config["INVBINOM_DIGITS"] = int(os.getenv("INVBINOM_DIGITS", 40))
    app.config["INVBINOM_GUARD"] = int(os.getenv("INVBINOM_GUARD", 10))
    app.config["INVBINOM_JOBS"] = int(os.getenv("INVBINOM_JOBS", os.cpu_count() or 1))

    # Barrido programado del catálogo
    app.config["VERIFY_SCHEDULE_ENABLED"] = _env_bool("VERIFY_SCHEDULE_ENABLED", "False")
    app.config["VERIFY_SCHEDULE_HOUR"] = int(os.getenv("VERIFY_SCHEDULE_HOUR", 3))
    app.config["VERIFY_SCHEDULE_DIGITS"] = int(os.getenv("VERIFY_SCHEDULE_DIGITS", 40))

    if overrides:
        app.config.update(
            {key: value for key, value in overrides.items() if key.startswith(("INVBINOM_", "VERIFY_"))}
        )
