# Importar todos los modelos para que SQLAlchemy los reconozca
from .log.log import Log
from .report.verification_run import VerificationRecord, VerificationRun

# Exportar todos los modelos para facilitar las importaciones
__all__ = [
    'Log',
    'VerificationRun',
    'VerificationRecord',
]
