"""
Árboles de expresiones constantes.

Cada lado derecho del catálogo se escribe con estos nodos: literales
racionales (gaussianos), raíces de racionales, constantes con nombre,
exponenciales e^{iπr}, hojas Li_s / Li_{s1..sm} y las operaciones de suma,
producto, potencia entera y múltiplo racional. Los nodos son inmutables; la
aritmética entre literales racionales se pliega de forma exacta.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ...utils.cut_side import CutSide
from ...utils.named_constant import NamedConstant


class ConstantExpr:
    """Base de todos los nodos. Solo define la aritmética y el recorrido."""

    def children(self):
        return ()

    def rebuild(self, children):
        return self

    def to_text(self):
        raise NotImplementedError

    def __str__(self):
        return self.to_text()

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return add(self, neg(as_expr(other)))

    def __rsub__(self, other):
        return add(other, neg(self))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __pow__(self, exponent):
        return power(self, exponent)


@dataclass(frozen=True, eq=True)
class Rat(ConstantExpr):
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return Rat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def to_text(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "i" if self.im == 1 else f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


@dataclass(frozen=True, eq=True)
class Sqrt(ConstantExpr):
    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand <= 0:
            raise ValueError("La raíz solo admite radicandos racionales positivos.")

    def to_text(self):
        return f"sqrt({self.radicand})"


@dataclass(frozen=True, eq=True)
class Const(ConstantExpr):
    name: NamedConstant

    def to_text(self):
        return self.name.value


@dataclass(frozen=True, eq=True)
class ExpIPi(ConstantExpr):
    """e^{iπ·turn}"""

    turn: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turn", Fraction(self.turn))

    def to_text(self):
        return f"exp(i*pi*{self.turn})"


@dataclass(frozen=True, eq=True)
class Li(ConstantExpr):
    s: int
    point: ConstantExpr
    side: CutSide = CutSide.AUTO

    def __post_init__(self):
        object.__setattr__(self, "point", as_expr(self.point))

    def to_text(self):
        suffix = "" if self.side == CutSide.AUTO else f";{self.side.value}"
        return f"Li{self.s}({self.point.to_text()}{suffix})"


@dataclass(frozen=True, eq=True)
class Mpl(ConstantExpr):
    weights: tuple
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "args", tuple(as_expr(a) for a in self.args))

    def to_text(self):
        weights = ",".join(str(w) for w in self.weights)
        args = ",".join(a.to_text() for a in self.args)
        return f"Li_{{{weights}}}({args})"


@dataclass(frozen=True, eq=True)
class Im(ConstantExpr):
    arg: ConstantExpr

    def children(self):
        return (self.arg,)

    def rebuild(self, children):
        return Im(children[0])

    def to_text(self):
        return f"Im({self.arg.to_text()})"


@dataclass(frozen=True, eq=True)
class Re(ConstantExpr):
    arg: ConstantExpr

    def children(self):
        return (self.arg,)

    def rebuild(self, children):
        return Re(children[0])

    def to_text(self):
        return f"Re({self.arg.to_text()})"


@dataclass(frozen=True, eq=True)
class Add(ConstantExpr):
    terms: tuple

    def children(self):
        return self.terms

    def rebuild(self, children):
        return Add(tuple(children))

    def to_text(self):
        return "(" + " + ".join(t.to_text() for t in self.terms) + ")"


@dataclass(frozen=True, eq=True)
class Mul(ConstantExpr):
    factors: tuple

    def children(self):
        return self.factors

    def rebuild(self, children):
        return Mul(tuple(children))

    def to_text(self):
        return "*".join(f.to_text() for f in self.factors)


@dataclass(frozen=True, eq=True)
class Pow(ConstantExpr):
    base: ConstantExpr
    exponent: int

    def children(self):
        return (self.base,)

    def rebuild(self, children):
        return Pow(children[0], self.exponent)

    def to_text(self):
        return f"({self.base.to_text()})^{self.exponent}"


@dataclass(frozen=True, eq=True)
class Scale(ConstantExpr):
    coeff: Fraction
    arg: ConstantExpr

    def children(self):
        return (self.arg,)

    def rebuild(self, children):
        return Scale(self.coeff, children[0])

    def to_text(self):
        return f"{self.coeff}*{self.arg.to_text()}"


ZERO = Rat(0)
ONE = Rat(1)
I = Rat(0, 1)


def as_expr(value):
    if isinstance(value, ConstantExpr):
        return value
    if isinstance(value, bool):
        raise TypeError("Un booleano no es una expresión constante.")
    if isinstance(value, Rational):
        return Rat(Fraction(value))
    if isinstance(value, complex):
        return Rat(Fraction(value.real), Fraction(value.imag))
    raise TypeError(f"No se puede convertir '{type(value).__name__}' en una expresión constante.")


def _rat_mul(a, b):
    return Rat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def _rat_inverse(a):
    norm = a.norm()
    if norm == 0:
        raise ZeroDivisionError("División por cero en aritmética racional")
    return Rat(a.re / norm, -a.im / norm)


def scale(coeff, expr):
    coeff = Fraction(coeff)
    expr = as_expr(expr)
    if coeff == 0:
        return ZERO
    if coeff == 1:
        return expr
    if isinstance(expr, Rat):
        return Rat(coeff * expr.re, coeff * expr.im)
    if isinstance(expr, Scale):
        return scale(coeff * expr.coeff, expr.arg)
    return Scale(coeff, expr)


def neg(expr):
    return scale(-1, expr)


def add(a, b):
    a, b = as_expr(a), as_expr(b)
    if isinstance(a, Rat) and isinstance(b, Rat):
        return Rat(a.re + b.re, a.im + b.im)
    if isinstance(a, Rat) and a.is_zero():
        return b
    if isinstance(b, Rat) and b.is_zero():
        return a
    terms = []
    for part in (a, b):
        terms.extend(part.terms if isinstance(part, Add) else (part,))
    return Add(tuple(terms))


def mul(a, b):
    a, b = as_expr(a), as_expr(b)
    if isinstance(a, Rat) and isinstance(b, Rat):
        return _rat_mul(a, b)
    for left, right in ((a, b), (b, a)):
        if isinstance(left, Rat):
            if left.is_zero():
                return ZERO
            if left.is_real():
                return scale(left.re, right)
    if isinstance(a, Scale):
        return scale(a.coeff, mul(a.arg, b))
    if isinstance(b, Scale):
        return scale(b.coeff, mul(a, b.arg))
    factors = []
    for part in (a, b):
        factors.extend(part.factors if isinstance(part, Mul) else (part,))
    return Mul(tuple(factors))


def div(a, b):
    a, b = as_expr(a), as_expr(b)
    if isinstance(b, Rat):
        if b.is_zero():
            raise ZeroDivisionError("División por cero en aritmética racional")
        if b.is_real():
            return scale(1 / b.re, a)
        return mul(a, _rat_inverse(b))
    return mul(a, power(b, -1))


def power(base, exponent):
    if not isinstance(exponent, int) or isinstance(exponent, bool):
        raise TypeError("Solo se admiten potencias enteras.")
    base = as_expr(base)
    if exponent == 1:
        return base
    if exponent == 0:
        return ONE
    if isinstance(base, Rat):
        result = ONE
        factor = base if exponent > 0 else _rat_inverse(base)
        for _ in range(abs(exponent)):
            result = _rat_mul(result, factor)
        return result
    if isinstance(base, Pow):
        return power(base.base, base.exponent * exponent)
    return Pow(base, exponent)


def rational(numerator, denominator=1):
    return Rat(Fraction(numerator, denominator))


def sqrt(radicand):
    return Sqrt(Fraction(radicand))


def const(name):
    return Const(name)


def exp_i_pi(turn):
    return ExpIPi(Fraction(turn))


def coefficient_paths(expr):
    """Rutas (índices de hijos) hasta cada múltiplo racional, en preorden."""
    paths = []

    def visit(node, path):
        if isinstance(node, Scale):
            paths.append(path)
        for index, child in enumerate(node.children()):
            visit(child, path + (index,))

    visit(expr, ())
    return paths


def replace_coefficient(expr, path, coeff):
    if not path:
        if not isinstance(expr, Scale):
            raise ValueError("La ruta no apunta a un coeficiente racional.")
        return Scale(Fraction(coeff), expr.arg)
    children = list(expr.children())
    children[path[0]] = replace_coefficient(children[path[0]], path[1:], coeff)
    return expr.rebuild(children)


def coefficient_at(expr, path):
    node = expr
    for index in path:
        node = node.children()[index]
    return node.coeff
