from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from mpmath import MPContext

from ...utils.errors import EvaluationError

MIN_DIGITS = 10


@dataclass(frozen=True)
class PrecisionCtx:
    """
    Precisión de trabajo de una evaluación.

    Cada contexto tiene su propio MPContext de mpmath (dps = digits + guard),
    así ninguna operación toca la precisión global ``mpmath.mp``. El atributo
    ``memo`` guarda constantes y hojas Li ya evaluadas en este contexto.
    """

    digits: int = 40
    guard: int = 10
    memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.digits, int) or isinstance(self.digits, bool):
            raise TypeError("El campo 'digits' debe ser de tipo 'int'.")
        if not isinstance(self.guard, int) or isinstance(self.guard, bool):
            raise TypeError("El campo 'guard' debe ser de tipo 'int'.")
        if self.digits < MIN_DIGITS:
            raise ValueError(f"La precisión debe ser de al menos {MIN_DIGITS} dígitos.")
        if self.guard < 0:
            raise ValueError("Los dígitos de guarda no pueden ser negativos.")

    @cached_property
    def mp(self):
        context = MPContext()
        context.dps = self.dps
        return context

    @property
    def dps(self):
        return self.digits + self.guard

    @cached_property
    def eps(self):
        return self.mp.mpf(10) ** (-self.dps)

    @cached_property
    def tolerance(self):
        # Tolerancia al nivel de los dígitos reportados
        return self.mp.mpf(10) ** (-self.digits)

    def with_guard(self, guard):
        return PrecisionCtx(digits=self.digits, guard=guard)

    def convert(self, value):
        """Convierte enteros, Fraction, complex o valores mpmath al contexto."""
        if isinstance(value, Fraction):
            return self.mp.mpf(value.numerator) / value.denominator
        if isinstance(value, complex):
            return self.mp.mpc(value.real, value.imag)
        if hasattr(value, "imag") and hasattr(value, "real") and not isinstance(value, (int, float)):
            return self.mp.mpc(value.real, value.imag)
        return self.mp.mpf(value)

    def to_dict(self):
        return {"digits": self.digits, "guard": self.guard}


@dataclass(frozen=True)
class ApComplex:
    """Valor complejo de precisión arbitraria junto con los dígitos confiables."""

    re: object
    im: object
    prec: int

    @classmethod
    def from_value(cls, value, ctx, prec=None):
        mp = ctx.mp
        value = mp.mpc(value)
        if not mp.isfinite(value):
            raise EvaluationError("La evaluación produjo un valor no finito")
        return cls(re=value.real, im=value.imag, prec=ctx.digits if prec is None else min(prec, ctx.digits))

    @property
    def value(self):
        return self.re.context.mpc(self.re, self.im)

    def __abs__(self):
        return abs(self.value)

    def is_real(self):
        scale = max(1, abs(self.re))
        return abs(self.im) <= scale * self.re.context.mpf(10) ** (-self.prec)

    def to_string(self, digits=None):
        digits = self.prec if digits is None else digits
        nstr = self.re.context.nstr
        if self.is_real():
            return nstr(self.re, digits)
        sign = "-" if self.im < 0 else "+"
        return f"{nstr(self.re, digits)} {sign} {nstr(abs(self.im), digits)}i"

    def __str__(self):
        return self.to_string()

    def to_dict(self):
        nstr = self.re.context.nstr
        return {
            "re": nstr(self.re, self.prec),
            "im": nstr(self.im, self.prec),
            "prec": self.prec,
        }
