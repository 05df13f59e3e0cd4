import logging

from flask import has_app_context

from ...models.log.log import Log
from ...database import db

logger = logging.getLogger("invbinom")


class LogService:

    @staticmethod
    def get_all_logs(level=None):

        query = Log.query
        if level is not None:
            query = query.filter(Log.level == level)

        return [log.to_dict() for log in query.order_by(Log.id).all()]

    @staticmethod
    def get_log_by_id(id_log):

        log = Log.query.filter(Log.id == id_log).first()

        if log is None:
            LogService.create_log(
                {
                    "module": f"{LogService.__name__}.{LogService.get_log_by_id.__name__}",
                    "message": "No se encontró el log buscado por id",
                }
            )
            raise ValueError("No se encontró el log")

        return log.to_dict()

    @staticmethod
    def create_log(log):
        """
        Guarda el log en la base de datos. Fuera de un contexto de aplicación
        (procesos de trabajo, uso como librería) lo envía al logger 'invbinom'.
        """
        level = log.get("level", "error")

        if not has_app_context():
            logger.log(
                getattr(logging, level.upper(), logging.ERROR),
                "%s: %s",
                log["module"],
                log["message"],
            )
            return None

        new_log = Log(level=level, module=log["module"], message=log["message"])

        db.session.add(new_log)
        db.session.commit()

        return new_log
