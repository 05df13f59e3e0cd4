import sys
from functools import wraps

import click

from app.services.log.log_service import LogService
from app.utils.errors import EvaluationError, PrecisionUnreachableError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3


def retry_with_more_guard(retries=2):
    """Repite la llamada duplicando los dígitos de guarda si la precisión no se alcanza.

    Args:
        retries: reintentos permitidos después del primer intento

    La función decorada debe recibir el contexto como argumento nombrado ``ctx``.
    """

    def wrapper(fn):
        @wraps(fn)
        def decorator(*args, ctx, **kwargs):
            attempt_ctx = ctx
            for attempt in range(retries + 1):
                try:
                    return fn(*args, ctx=attempt_ctx, **kwargs)
                except PrecisionUnreachableError:
                    if attempt == retries:
                        raise
                    attempt_ctx = attempt_ctx.with_guard(max(1, 2 * attempt_ctx.guard))
                    LogService.create_log(
                        {
                            "module": f"{fn.__module__}.{fn.__name__}",
                            "message": f"Reintento con {attempt_ctx.guard} dígitos de guarda",
                            "level": "warning",
                        }
                    )

        return decorator

    return wrapper


def cli_exit_codes(fn):
    """Traduce excepciones de un comando de consola a los códigos de salida:
    2 para entradas inválidas y 3 para errores de evaluación."""

    @wraps(fn)
    def decorator(*args, **kwargs):
        try:
            code = fn(*args, **kwargs)
        except (ValueError, TypeError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except EvaluationError as e:
            LogService.create_log(
                {
                    "module": f"{fn.__module__}.{fn.__name__}",
                    "message": f"Error de evaluación: {e}",
                }
            )
            click.echo(f"error de evaluación: {e}", err=True)
            sys.exit(EXIT_EVALUATION)
        sys.exit(EXIT_OK if code is None else code)

    return decorator
