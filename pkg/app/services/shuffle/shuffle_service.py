from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb

from ...models.word.word import Monomial, Word, WordCombination
from ...services.log.log_service import LogService

MAX_EXPANSION_K = 6


@lru_cache(maxsize=4096)
def _shuffle_counts(u, v):
    """Intercalados de u y v (tuplas) con su multiplicidad."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    counts = Counter()
    for word, count in _shuffle_counts(u[:-1], v):
        counts[word + (u[-1],)] += count
    for word, count in _shuffle_counts(u, v[:-1]):
        counts[word + (v[-1],)] += count
    return tuple(counts.items())


class ShuffleService:

    @staticmethod
    def shuffle(u, v):
        u, v = Word(u), Word(v)
        result = WordCombination()
        for letters, count in _shuffle_counts(u.letters, v.letters):
            result.add_term(Monomial(Word(letters)), count)
        return result

    @staticmethod
    def shuffle_combinations(left, right):
        """Extensión bilineal del producto shuffle; potencias de log y escalar se suman."""
        result = WordCombination()
        for a, ca in left.items():
            for b, cb in right.items():
                for letters, count in _shuffle_counts(a.word.letters, b.word.letters):
                    monomial = Monomial(
                        Word(letters),
                        a.log_power + b.log_power,
                        a.scalar_power + b.scalar_power,
                    )
                    result.add_term(monomial, ca * cb * count)
        return result

    @staticmethod
    def remove_trailing_zeros(word):
        """
        Reescribe G(u, 0^p; z) como combinación de G(v; z)·log^m(z) con v
        terminando en letra no nula, usando
        p·G(u,0^p) = log z·G(u,0^(p-1)) - Σ_i G(u con 0 insertado antes de u_i, 0^(p-1)).
        """
        word = Word(word)
        if not word.letters or word.is_all_zero():
            LogService.create_log(
                {
                    "module": f"{ShuffleService.__name__}.{ShuffleService.remove_trailing_zeros.__name__}",
                    "message": f"Se pidió quitar ceros finales de una palabra nula {word.to_text()}",
                }
            )
            raise ValueError("La palabra no puede ser vacía ni estar formada solo por ceros.")

        trailing = word.trailing_zeros()
        if trailing == 0:
            return WordCombination.of(word)

        zero = word.letters[-1]
        head = word.letters[: len(word) - trailing]
        return ShuffleService._regularize(head, trailing, zero)

    @staticmethod
    def _regularize(head, trailing, zero):
        if trailing == 0:
            return WordCombination.of(head)

        result = WordCombination()
        for monomial, coeff in ShuffleService._regularize(head, trailing - 1, zero).items():
            result.add_term(monomial._replace(log_power=monomial.log_power + 1), coeff)

        for index in range(len(head)):
            inserted = head[:index] + (zero,) + head[index:]
            result = result - ShuffleService._regularize(inserted, trailing - 1, zero)

        return result.scaled(Fraction(1, trailing))

    @staticmethod
    def integrand_word_expansion(k, sign):
        """
        log^(k-2)(sign·c·t/(1-t^2))·log t como combinación de palabras de
        longitud k-1 sobre {-1, 0, 1}. La constante log(sign·c) queda como letra
        escalar (scalar_power), y log(t/(1-t^2)) = G(0;t) - G(1;t) - G(-1;t).
        """
        if not isinstance(k, int) or isinstance(k, bool) or not 2 <= k <= MAX_EXPANSION_K:
            LogService.create_log(
                {
                    "module": f"{ShuffleService.__name__}.{ShuffleService.integrand_word_expansion.__name__}",
                    "message": f"Se pidió la expansión del integrando con k fuera de rango: {k}",
                }
            )
            raise ValueError(f"k debe estar entre 2 y {MAX_EXPANSION_K}.")
        if sign not in (1, -1):
            raise ValueError("El signo debe ser 1 o -1.")

        log_part = WordCombination()
        log_part.add_term(Monomial(Word((0,))), 1)
        log_part.add_term(Monomial(Word((1,))), -1)
        log_part.add_term(Monomial(Word((-1,))), -1)

        n = k - 2
        result = WordCombination()
        power = WordCombination.of(())
        for j in range(n + 1):
            for monomial, coeff in power.items():
                result.add_term(monomial._replace(scalar_power=n - j), coeff * comb(n, j))
            power = ShuffleService.shuffle_combinations(power, log_part)

        return ShuffleService.shuffle_combinations(result, WordCombination.of((0,)))
