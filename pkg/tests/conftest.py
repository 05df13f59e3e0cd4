import pytest

from app import create_app
from app.database import db
from app.models.precision.precision import PrecisionCtx


@pytest.fixture
def app():
    app = create_app(
        {
            "TESTING": True,
            "DATABASE_URI": "sqlite:///:memory:",
            "INVBINOM_DIGITS": 20,
            "INVBINOM_JOBS": 1,
            "VERIFY_SCHEDULE_ENABLED": False,
        }
    )
    with app.app_context():
        yield app
        db.session.remove()


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def ctx20():
    return PrecisionCtx(digits=20)


@pytest.fixture
def ctx30():
    return PrecisionCtx(digits=30)
