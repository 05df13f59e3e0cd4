import random
from fractions import Fraction
from math import comb

import pytest

from app.models.expression.constant_expr import Rat
from app.models.polylog.polylog import GplWord
from app.models.word.word import Monomial, Word, WordCombination
from app.services.constants.constants_service import ConstantsService
from app.services.polylog.polylog_service import PolylogService
from app.services.quadrature.contour_service import ContourService
from app.services.shuffle.shuffle_service import ShuffleService


def test_shuffle_of_single_letters():
    result = ShuffleService.shuffle(("a",), ("b",))
    assert result.coefficient(("a", "b")) == 1
    assert result.coefficient(("b", "a")) == 1
    assert len(result) == 2


def test_shuffle_with_repeated_letters_counts_multiplicity():
    result = ShuffleService.shuffle((0,), (0,))
    assert result.coefficient((0, 0)) == 2


@pytest.mark.parametrize("u, v", [((1, 2), (3,)), ((1, 2), (3, 4)), ((0, 1, 0), (1, -1))])
def test_shuffle_total_multiplicity(u, v):
    result = ShuffleService.shuffle(u, v)
    assert result.total_multiplicity() == comb(len(u) + len(v), len(u))


def test_shuffle_with_empty_word():
    assert ShuffleService.shuffle((), (1, 2)) == WordCombination.of((1, 2))


def test_shuffle_combinations_adds_prefactor_powers():
    left = WordCombination.of((1,), coeff=2, log_power=1)
    right = WordCombination.of((0,), coeff=Fraction(1, 2), scalar_power=1)
    result = ShuffleService.shuffle_combinations(left, right)
    assert result.coefficient((1, 0), log_power=1, scalar_power=1) == 1
    assert result.coefficient((0, 1), log_power=1, scalar_power=1) == 1


def test_remove_trailing_zeros_single_zero():
    result = ShuffleService.remove_trailing_zeros((1, 0))
    assert result.coefficient((1,), log_power=1) == 1
    assert result.coefficient((0, 1)) == -1
    assert len(result) == 2


def test_remove_trailing_zeros_leaves_no_trailing_zero():
    result = ShuffleService.remove_trailing_zeros((2, 1, 0, 0))
    for monomial, _ in result.items():
        assert monomial.word.letters[-1] != 0
    # término con log² z: G(2,1;z)·log²z / 2
    assert result.coefficient((2, 1), log_power=2) == Fraction(1, 2)


def test_remove_trailing_zeros_without_zeros_is_identity():
    assert ShuffleService.remove_trailing_zeros((1, 2)) == WordCombination.of((1, 2))


def test_remove_trailing_zeros_rejects_null_words():
    with pytest.raises(ValueError):
        ShuffleService.remove_trailing_zeros((0, 0))
    with pytest.raises(ValueError):
        ShuffleService.remove_trailing_zeros(())


def test_integrand_word_expansion_weight_two():
    assert ShuffleService.integrand_word_expansion(2, 1) == WordCombination.of((0,))


def test_integrand_word_expansion_weight_three():
    result = ShuffleService.integrand_word_expansion(3, -1)
    assert result.coefficient((0,), scalar_power=1) == 1
    assert result.coefficient((0, 0)) == 2
    assert result.coefficient((1, 0)) == -1
    assert result.coefficient((0, 1)) == -1
    assert result.coefficient((-1, 0)) == -1
    assert result.coefficient((0, -1)) == -1
    assert all(len(m.word) == 2 or m.scalar_power for m, _ in result.items())


def test_integrand_word_expansion_rejects_bad_arguments():
    with pytest.raises(ValueError):
        ShuffleService.integrand_word_expansion(7, 1)
    with pytest.raises(ValueError):
        ShuffleService.integrand_word_expansion(3, 0)


def test_word_combination_drops_zero_coefficients():
    combination = WordCombination()
    combination.add_term(Monomial(Word((1,))), 1)
    combination.add_term(Monomial(Word((1,))), -1)
    assert len(combination) == 0


def shuffle_cases(count, seed):
    rng = random.Random(seed)

    def word():
        return tuple(rng.choice((-1, 1, 2)) for _ in range(rng.randint(1, 3)))

    return [(word(), word()) for _ in range(count)]


@pytest.mark.parametrize("u, v", shuffle_cases(50, seed=7))
def test_shuffle_is_a_homomorphism_for_gpl(ctx20, u, v):
    z = Fraction(1, 2)
    left = PolylogService.gpl_eval(GplWord(u, z), ctx20).value * PolylogService.gpl_eval(GplWord(v, z), ctx20).value
    right = PolylogService.evaluate_combination(ShuffleService.shuffle(u, v), z, ctx20).value
    assert abs(left - right) <= ctx20.mp.mpf(10) ** -15 * max(1, abs(left))


def expansion_points(seed):
    rng = random.Random(seed)
    points = []
    while len(points) < 10:
        t = Rat(Fraction(rng.randint(-6, 6), 10), Fraction(rng.randint(-6, 6), 10))
        if t.im != 0 and t.norm() <= Fraction(9, 25):
            scalar = complex(rng.randint(-8, 8) / 4, rng.randint(-8, 8) / 4)
            points.append((t, scalar))
    return points


@pytest.mark.parametrize("k", [3, 4, 5])
def test_integrand_word_expansion_is_pointwise_exact(ctx20, k):
    mp = ctx20.mp
    combination = ShuffleService.integrand_word_expansion(k, 1)
    for t, scalar in expansion_points(seed=k):
        value = PolylogService.evaluate_combination(combination, t, ctx20, scalar=scalar).value
        x = ConstantsService.point_value(t, ctx20)
        expected = (mp.mpc(scalar) + mp.log(x) - mp.log(1 - x) - mp.log(1 + x)) ** (k - 2) * mp.log(x)
        assert abs(value - expected) <= mp.mpf(10) ** -15 * max(1, abs(expected))


def trailing_zero_cases(count, seed):
    rng = random.Random(seed)

    def letter():
        while True:
            a = Rat(Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4))
            if 1 <= a.norm() <= 4:
                return a

    cases = []
    while len(cases) < count:
        z = Rat(Fraction(rng.randint(-8, 8), 10), Fraction(rng.randint(-8, 8), 10))
        if 0 < z.norm() <= Fraction(16, 25):
            letters = (letter(), letter(), 0) if len(cases) % 2 == 0 else (letter(), 0, 0)
            cases.append((letters, z))
    return cases


@pytest.mark.slow
@pytest.mark.parametrize("letters, z", trailing_zero_cases(10, seed=11))
def test_remove_trailing_zeros_matches_quadrature(ctx30, letters, z):
    regularized = PolylogService.evaluate_combination(ShuffleService.remove_trailing_zeros(letters), z, ctx30).value
    quadrature = ContourService.gpl_recursion_quadrature(GplWord(letters, z), ctx30).value
    assert abs(regularized - quadrature) <= ctx30.mp.mpf(10) ** -28 * max(1, abs(quadrature))
