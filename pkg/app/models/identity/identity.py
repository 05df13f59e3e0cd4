from dataclasses import dataclass, replace

from ..expression.constant_expr import ONE, ConstantExpr, as_expr
from ..polylog.polylog import as_point, point_text

DEFAULT_MIN_DIGITS = 40


@dataclass(frozen=True)
class SeriesTerm:
    """factor · S_k(z), sumado por la vía de la serie."""

    k: int
    z: object
    factor: ConstantExpr = ONE

    def __post_init__(self):
        object.__setattr__(self, "z", as_point(self.z))
        object.__setattr__(self, "factor", as_expr(self.factor))

    def to_text(self):
        return f"{self.factor.to_text()}*S_{self.k}({point_text(self.z)})"


@dataclass(frozen=True)
class ContourTerm:
    """factor · genchen_contour(k, w)"""

    k: int
    w: object
    factor: ConstantExpr = ONE

    def __post_init__(self):
        object.__setattr__(self, "w", as_point(self.w))
        object.__setattr__(self, "factor", as_expr(self.factor))

    def to_text(self):
        return f"{self.factor.to_text()}*C_{self.k}({point_text(self.w)})"


@dataclass(frozen=True)
class ExprTerm:
    expr: ConstantExpr

    def to_text(self):
        return self.expr.to_text()


@dataclass(frozen=True)
class ChudnovskyTerm:
    def to_text(self):
        return "sum_{n>=1} 1/(n^3 C(3n,n) 2^n)"


@dataclass(frozen=True)
class F32Term:
    """x·3F2(1/2,1,1;3/2,3/2;-x^2/4) con x = (1-w^2)/w"""

    w: object

    def __post_init__(self):
        object.__setattr__(self, "w", as_point(self.w))

    def to_text(self):
        return f"x*3F2(1/2,1,1;3/2,3/2;-x^2/4) at w={point_text(self.w)}"


@dataclass(frozen=True)
class Theorem3Family:
    seed: int = 0x5EED
    count: int = 20

    def to_text(self):
        return f"theorem3(seed={self.seed:#x}, count={self.count})"


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    lhs: object
    rhs: object
    weight: int
    level: object
    anchor: str
    membership: str = ""
    min_digits: int = DEFAULT_MIN_DIGITS

    @property
    def is_family(self):
        return isinstance(self.lhs, Theorem3Family)

    def with_rhs(self, rhs):
        return replace(self, rhs=rhs)

    def to_text(self):
        rhs = "theorem3_rhs" if self.rhs is None else self.rhs.to_text()
        return f"{self.id}|{self.lhs.to_text()}|{rhs}|{self.weight}|{self.level}|{self.min_digits}"

    def to_dict(self, detailed=False):
        data = {
            "id": self.id,
            "description": self.description,
            "anchor": self.anchor,
            "weight": self.weight,
            "level": self.level,
            "membership": self.membership,
            "min_digits": self.min_digits,
        }
        if detailed:
            data["lhs"] = self.lhs.to_text()
            data["rhs"] = None if self.rhs is None else self.rhs.to_text()
        return data
