from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from ..polylog.polylog import is_zero_point, point_text


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        return Word(self.letters + tuple(other))

    def is_all_zero(self):
        return all(is_zero_point(a) for a in self.letters)

    def trailing_zeros(self):
        count = 0
        for letter in reversed(self.letters):
            if not is_zero_point(letter):
                break
            count += 1
        return count

    def to_text(self):
        return "(" + ",".join(point_text(a) for a in self.letters) + ")"


class Monomial(NamedTuple):
    """c · G(word; z) · log^log_power(z) · scalar^scalar_power"""

    word: Word
    log_power: int = 0
    scalar_power: int = 0


@dataclass
class WordCombination:
    """
    Combinación Q-lineal finita de monomios. Los coeficientes son Fraction
    exactas y nunca se guardan ceros.
    """

    coefficients: dict = field(default_factory=dict)

    @classmethod
    def of(cls, word, coeff=1, log_power=0, scalar_power=0):
        combination = cls()
        combination.add_term(Monomial(Word(word), log_power, scalar_power), coeff)
        return combination

    def add_term(self, monomial, coeff):
        coeff = Fraction(coeff)
        if coeff == 0:
            return self
        total = self.coefficients.get(monomial, Fraction(0)) + coeff
        if total == 0:
            self.coefficients.pop(monomial, None)
        else:
            self.coefficients[monomial] = total
        return self

    def items(self):
        return self.coefficients.items()

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, WordCombination) and self.coefficients == other.coefficients

    def __add__(self, other):
        result = WordCombination(dict(self.coefficients))
        for monomial, coeff in other.items():
            result.add_term(monomial, coeff)
        return result

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, factor):
        result = WordCombination()
        for monomial, coeff in self.items():
            result.add_term(monomial, coeff * Fraction(factor))
        return result

    def total_multiplicity(self):
        return sum(self.coefficients.values())

    @property
    def terms(self):
        """Word → coeficiente para los monomios sin prefactor log ni escalar."""
        return {m.word: c for m, c in self.items() if m.log_power == 0 and m.scalar_power == 0}

    @property
    def log_prefactor_powers(self):
        return {(m.word, m.log_power): c for m, c in self.items() if m.log_power > 0 and m.scalar_power == 0}

    def coefficient(self, word, log_power=0, scalar_power=0):
        return self.coefficients.get(Monomial(Word(word), log_power, scalar_power), Fraction(0))

    def to_dict(self):
        return [
            {
                "word": m.word.to_text(),
                "log_power": m.log_power,
                "scalar_power": m.scalar_power,
                "coefficient": str(c),
            }
            for m, c in self.items()
        ]
