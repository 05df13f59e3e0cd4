"""
Jerarquía de errores numéricos.

Los errores de entrada del usuario (formatos inválidos, ids desconocidos,
parámetros fuera de rango) siguen usando ValueError/TypeError como el resto
de validadores; todo lo que falla durante una evaluación cuelga de
EvaluationError.
"""


class EvaluationError(ArithmeticError):
    """Fallo de una evaluación numérica."""


class PrecisionUnreachableError(EvaluationError):
    """La cota de cola, el doblado o el límite de niveles no alcanzan la precisión pedida."""


class DivergentError(EvaluationError):
    """Serie divergente o palabra GPL divergente en el extremo."""


class PoleError(EvaluationError):
    pass


class BranchJumpError(EvaluationError):
    """Salto de rama sin resolver sobre un segmento de contorno."""


class QuadratureError(EvaluationError):
    pass


class DomainError(EvaluationError):
    """Parámetro numérico fuera del dominio de la representación usada."""
