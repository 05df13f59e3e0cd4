from dataclasses import dataclass

from ..polylog.polylog import as_point, point_text


@dataclass(frozen=True)
class SeriesSpec:
    """S_k(z) = Σ z^n / ((2n+1)^k C(2n,n))"""

    k: int
    z: object

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise TypeError("El campo 'k' debe ser de tipo 'int'.")
        if self.k < 0:
            raise ValueError("El índice k de la serie no puede ser negativo.")
        object.__setattr__(self, "z", as_point(self.z))

    def to_text(self):
        return f"S_{self.k}({point_text(self.z)})"


@dataclass(frozen=True)
class Theorem3Param:
    """Parámetro w de la identidad Li2/Li3; el dominio se valida al evaluar."""

    w: object

    def __post_init__(self):
        object.__setattr__(self, "w", as_point(self.w))

    def to_text(self):
        return f"w={point_text(self.w)}"
