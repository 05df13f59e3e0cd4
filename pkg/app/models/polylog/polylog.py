from dataclasses import dataclass

from ..expression.constant_expr import ConstantExpr, Rat, as_expr

MAX_DEPTH = 4
MAX_WEIGHT = 6


def as_point(value):
    """Puntos exactos pasan a ConstantExpr; los valores mpmath se dejan tal cual."""
    if isinstance(value, ConstantExpr):
        return value
    if hasattr(value, "_mpf_") or hasattr(value, "_mpc_"):
        return value
    return as_expr(value)


def is_zero_point(value):
    if isinstance(value, Rat):
        return value.is_zero()
    if isinstance(value, ConstantExpr):
        return False
    return value == 0


def point_text(value):
    if isinstance(value, ConstantExpr):
        return value.to_text()
    return str(value)


@dataclass(frozen=True)
class MplSpec:
    """Li_{s1..sm}(z1..zm) = Σ_{n1>…>nm≥1} z1^n1…zm^nm / (n1^s1…nm^sm)"""

    weights: tuple
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "args", tuple(as_point(a) for a in self.args))
        if not self.weights:
            raise ValueError("Un polilogaritmo múltiple necesita profundidad m ≥ 1.")
        if len(self.weights) != len(self.args):
            raise ValueError("Los pesos y los argumentos deben tener la misma longitud.")
        if any(not isinstance(s, int) or isinstance(s, bool) or s < 1 for s in self.weights):
            raise ValueError("Los pesos deben ser enteros positivos.")
        if self.depth > MAX_DEPTH:
            raise ValueError(f"La profundidad máxima es {MAX_DEPTH}.")
        if self.weight > MAX_WEIGHT:
            raise ValueError(f"El peso máximo es {MAX_WEIGHT}.")

    @property
    def depth(self):
        return len(self.weights)

    @property
    def weight(self):
        return sum(self.weights)

    def partial_products(self, ctx):
        from ...services.constants.constants_service import ConstantsService

        products = []
        running = ctx.mp.mpc(1)
        for arg in self.args:
            running *= ConstantsService.point_value(arg, ctx)
            products.append(running)
        return products

    def is_convergent(self, ctx):
        """|z1…zj| ≤ 1 para todo j, excluyendo (s1, z1) = (1, 1)."""
        slack = ctx.eps * 100
        products = self.partial_products(ctx)
        if any(abs(p) > 1 + slack for p in products):
            return False
        first = products[0]
        if self.weights[0] == 1 and abs(first - 1) <= slack:
            return False
        return True

    def to_text(self):
        weights = ",".join(str(s) for s in self.weights)
        return f"Li_{{{weights}}}({','.join(point_text(a) for a in self.args)})"

    def to_dict(self):
        return {"weights": list(self.weights), "args": [point_text(a) for a in self.args]}


@dataclass(frozen=True)
class GplWord:
    """G(α1, …, αn; z)"""

    letters: tuple
    arg: object

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(as_point(a) for a in self.letters))
        object.__setattr__(self, "arg", as_point(self.arg))
        if len(self.letters) > MAX_WEIGHT:
            raise ValueError(f"El peso máximo es {MAX_WEIGHT}.")

    def __len__(self):
        return len(self.letters)

    def is_all_zero(self):
        return all(is_zero_point(a) for a in self.letters)

    def has_trailing_zero(self):
        return bool(self.letters) and is_zero_point(self.letters[-1])

    def is_convergent(self):
        if not self.letters:
            return True
        return self.letters[0] != self.arg and not self.has_trailing_zero()

    def to_text(self):
        letters = ",".join(point_text(a) for a in self.letters)
        return f"G({letters}; {point_text(self.arg)})"

    def to_dict(self):
        return {"letters": [point_text(a) for a in self.letters], "arg": point_text(self.arg)}
