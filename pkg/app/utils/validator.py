import re
from fractions import Fraction

from ..models.expression.constant_expr import I, Rat, exp_i_pi, sqrt
from ..models.precision.precision import MIN_DIGITS
from ..services.log.log_service import LogService
from .named_constant import NamedConstant

# Gramática de puntos complejos
regex_rational = r"^[+-]?\d+(/\d+)?$"
regex_decimal = r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?"
regex_imaginary = r"^(?P<im>[+-]?(\d+(\.\d*)?|\.\d+)?([eE][+-]?\d+)?)i$"
regex_complex = rf"^(?P<re>{regex_decimal})(?:(?P<im>[+-](\d+(\.\d*)?|\.\d+)?([eE][+-]?\d+)?)i)?$"
regex_exp = r"^exp\(i\*pi(\*(?P<num>[+-]?\d+)(/(?P<den>\d+))?)?\)$"
regex_sqrt = r"^sqrt\((?P<rad>\d+(/\d+)?)\)$"


def validate_data(data, required_fields):

    for field in required_fields:
        if field not in data or data.get(field) is None or data.get(field) == "":
            LogService.create_log(
                {
                    "module": f"{__name__}.{validate_data.__name__}",
                    "message": f"No se ingresó el campo '{field}', es obligatorio y no puede estar vacío. ",
                }
            )
            raise ValueError(f"El campo '{field}' es obligatorio y no puede estar vacío.")

    for field, expected_type in required_fields.items():
        value = data.get(field)

        if not isinstance(value, expected_type) or isinstance(value, bool):
            if isinstance(expected_type, tuple):
                type_names = " o ".join(t.__name__ for t in expected_type)
            else:
                type_names = expected_type.__name__
            LogService.create_log(
                {
                    "module": f"{__name__}.{validate_data.__name__}",
                    "message": f"Se ingresó el campo '{field}' y debe ser de tipo '{type_names}'.",
                }
            )
            raise TypeError(f"El campo '{field}' debe ser de tipo '{type_names}'.")

    return True


def _reject(function, text, message):
    LogService.create_log(
        {
            "module": f"{__name__}.{function.__name__}",
            "message": f"Entrada inválida '{text}': {message}",
        }
    )
    raise ValueError(message)


def parse_point(text):
    """
    Punto complejo exacto: 'a/b', decimales 'x', 'x+yi', 'yi', 'i',
    'exp(i*pi*p/q)' y 'sqrt(a/b)'. Los decimales se leen como fracciones exactas.
    """
    if not isinstance(text, str):
        raise TypeError("El punto debe ser un texto.")
    compact = text.replace(" ", "").lower()
    if not compact:
        _reject(parse_point, text, "El punto no puede estar vacío.")

    if re.match(regex_rational, compact):
        return Rat(Fraction(compact))

    match = re.match(regex_exp, compact)
    if match:
        numerator = int(match.group("num") or 1)
        denominator = int(match.group("den") or 1)
        if denominator == 0:
            _reject(parse_point, text, "El denominador no puede ser cero.")
        return exp_i_pi(Fraction(numerator, denominator))

    match = re.match(regex_sqrt, compact)
    if match:
        radicand = Fraction(match.group("rad"))
        if radicand <= 0:
            _reject(parse_point, text, "La raíz solo admite radicandos positivos.")
        return sqrt(radicand)

    if compact == "i":
        return I

    match = re.match(regex_imaginary, compact)
    if match:
        return Rat(0, _imaginary_part(match.group("im")))

    match = re.match(regex_complex, compact)
    if match:
        real = Fraction(match.group("re"))
        imag = _imaginary_part(match.group("im")) if compact.endswith("i") else Fraction(0)
        return Rat(real, imag)

    _reject(parse_point, text, f"No se reconoce el punto '{text}'.")


def _imaginary_part(part):
    if part in (None, "", "+"):
        return Fraction(1)
    if part == "-":
        return Fraction(-1)
    return Fraction(part)


def parse_letters(text):
    """Lista de letras separadas por comas: '0,1,-1' o '1/2,i'."""
    if not isinstance(text, str) or not text.strip():
        _reject(parse_letters, text, "La lista de letras no puede estar vacía.")
    return tuple(parse_point(part) for part in text.split(","))


def parse_int(text, field, minimum=None, maximum=None):
    try:
        value = int(text)
    except (TypeError, ValueError):
        _reject(parse_int, text, f"El campo '{field}' debe ser un número entero.")

    if minimum is not None and value < minimum:
        _reject(parse_int, text, f"El campo '{field}' debe ser al menos {minimum}.")
    if maximum is not None and value > maximum:
        _reject(parse_int, text, f"El campo '{field}' debe ser como máximo {maximum}.")
    return value


def validate_digits(digits):
    return parse_int(digits, "digits", minimum=MIN_DIGITS)


def parse_constant(text):
    try:
        return NamedConstant.from_name(text)
    except ValueError:
        _reject(parse_constant, text, f"La constante '{text}' no existe.")
