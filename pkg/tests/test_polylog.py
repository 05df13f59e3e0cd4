import random
from fractions import Fraction

import mpmath
import pytest

from app.models.expression.constant_expr import Rat, rational
from app.models.polylog.polylog import GplWord, MplSpec
from app.services.polylog.polylog_service import PolylogService
from app.services.quadrature.contour_service import ContourService
from app.utils.cut_side import CutSide
from app.utils.errors import DivergentError, PoleError

POINTS = [
    Rat(Fraction(3, 10)),
    Rat(Fraction(-7, 10), Fraction(1, 5)),
    Rat(0, Fraction(9, 10)),
    Rat(Fraction(99, 100)),
    Rat(2, 1),
    Rat(-5),
    Rat(Fraction(1, 2), Fraction(-3, 2)),
    Rat(Fraction(-1, 3), 4),
]


def to_mp(point):
    return mpmath.mpc(
        mpmath.mpf(point.re.numerator) / point.re.denominator,
        mpmath.mpf(point.im.numerator) / point.im.denominator,
    )


def close(value, expected, digits):
    with mpmath.workdps(digits + 10):
        got = mpmath.mpc(value.re, value.im)
        return abs(got - expected) <= mpmath.mpf(10) ** (-digits) * max(1, abs(expected))


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("point", POINTS, ids=lambda p: p.to_text())
def test_li_matches_mpmath_off_the_cut(ctx20, s, point):
    with mpmath.workdps(40):
        expected = mpmath.polylog(s, to_mp(point))
        assert close(PolylogService.li(s, point, ctx=ctx20), expected, 20)


def test_li_special_values(ctx20):
    with mpmath.workdps(40):
        assert close(PolylogService.li(2, 1, ctx=ctx20), mpmath.pi**2 / 6, 20)
        assert close(PolylogService.li(2, -1, ctx=ctx20), -mpmath.pi**2 / 12, 20)
        assert close(PolylogService.li(3, 1, ctx=ctx20), mpmath.zeta(3), 20)
        assert close(PolylogService.li(2, 0, ctx=ctx20), 0, 20)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [Fraction(3, 2), Fraction(4), Fraction(25), Fraction(100)])
def test_li_jump_across_the_cut(ctx20, s, x):
    upper = PolylogService.li(s, x, CutSide.UPPER, ctx20)
    lower = PolylogService.li(s, x, CutSide.LOWER, ctx20)
    with mpmath.workdps(40):
        log_x = mpmath.log(mpmath.mpf(x.numerator) / x.denominator)
        jump = 2j * mpmath.pi * log_x ** (s - 1) / mpmath.factorial(s - 1)
        difference = mpmath.mpc(upper.re, upper.im) - mpmath.mpc(lower.re, lower.im)
        assert abs(difference - jump) < mpmath.mpf(10) ** -19


def test_li_auto_side_is_upper(ctx20):
    assert PolylogService.li(2, 3, ctx=ctx20) == PolylogService.li(2, 3, CutSide.UPPER, ctx20)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_li_duplication(ctx20, s):
    z = Rat(Fraction(7, 10), Fraction(3, 10))
    left = PolylogService.li(s, z, ctx=ctx20)
    minus = PolylogService.li(s, -z, ctx=ctx20)
    square = PolylogService.li(s, z * z, ctx=ctx20)
    with mpmath.workdps(40):
        total = mpmath.mpc(left.re, left.im) + mpmath.mpc(minus.re, minus.im)
        expected = mpmath.mpf(2) ** (1 - s) * mpmath.mpc(square.re, square.im)
        assert abs(total - expected) < mpmath.mpf(10) ** -19


def test_li1_pole(ctx20):
    with pytest.raises(PoleError):
        PolylogService.li(1, 1, ctx=ctx20)


def test_li_rejects_weight_out_of_range(ctx20):
    with pytest.raises(ValueError):
        PolylogService.li(0, rational(1, 2), ctx=ctx20)
    with pytest.raises(ValueError):
        PolylogService.li(7, rational(1, 2), ctx=ctx20)


def nested_sum(weights, args, terms):
    """Suma anidada truncada en N términos, como oráculo."""
    total = mpmath.mpf(0)
    inner = [mpmath.mpf(0)] * len(weights)
    for n in range(1, terms + 1):
        values = []
        for j in range(len(weights)):
            tail = inner[j + 1] if j + 1 < len(weights) else 1
            values.append(args[j] ** n / mpmath.mpf(n) ** weights[j] * tail)
        for j in range(len(weights)):
            inner[j] += values[j]
        total = inner[0]
    return total


def test_mpl_direct_against_truncated_sum(ctx20):
    spec = MplSpec((2, 1), (rational(1, 2), rational(1, 3)))
    with mpmath.workdps(40):
        expected = nested_sum((2, 1), (mpmath.mpf(1) / 2, mpmath.mpf(1) / 3), 200)
        assert close(PolylogService.mpl_direct(spec, ctx20), expected, 20)


def test_mpl_direct_depth_three(ctx20):
    spec = MplSpec((1, 2, 1), (Rat(0, Fraction(1, 2)), rational(1, 2), rational(-1)))
    args = (mpmath.mpc(0, 0.5), mpmath.mpf(0.5), mpmath.mpf(-1))
    with mpmath.workdps(40):
        expected = nested_sum((1, 2, 1), args, 260)
        assert close(PolylogService.mpl_direct(spec, ctx20), expected, 20)


def test_mpl_direct_rejects_divergent_series(ctx20):
    with pytest.raises(DivergentError):
        PolylogService.mpl_direct(MplSpec((2,), (rational(2),)), ctx20)
    with pytest.raises(DivergentError):
        PolylogService.mpl_direct(MplSpec((1, 1), (rational(1), rational(1, 2))), ctx20)


def test_mpl_eval_zeta21_is_zeta3(ctx20):
    value = PolylogService.mpl_eval(MplSpec((2, 1), (1, 1)), ctx20)
    with mpmath.workdps(40):
        assert close(value, mpmath.zeta(3), 20)


def test_mpl_eval_on_the_unit_circle(ctx20):
    # Li_{1,1}(x, 1) = log²(1-x)/2
    value = PolylogService.mpl_eval(MplSpec((1, 1), (Rat(0, 1), 1)), ctx20)
    with mpmath.workdps(40):
        assert close(value, mpmath.log(1 - 1j) ** 2 / 2, 20)


def test_gpl_mpl_conversion_is_exact():
    word = GplWord((0, rational(1, 2), 0, 3), 1)
    sign, spec = PolylogService.gpl_to_mpl(word)
    assert sign == 1
    assert spec.weights == (2, 2)
    assert spec.args == (Rat(2), Rat(Fraction(1, 6)))
    assert PolylogService.mpl_to_gpl(spec, 1) == word


def test_gpl_to_mpl_rejects_trailing_zeros_and_null_words():
    with pytest.raises(ValueError):
        PolylogService.gpl_to_mpl(GplWord((1, 0), rational(1, 2)))
    with pytest.raises(ValueError):
        PolylogService.gpl_to_mpl(GplWord((0, 0), rational(1, 2)))
    with pytest.raises(ValueError):
        PolylogService.mpl_to_gpl(MplSpec((1,), (0,)), 1)


def test_gpl_depth_one_and_all_zero(ctx20):
    z = rational(1, 3)
    with mpmath.workdps(40):
        third = mpmath.mpf(1) / 3
        assert close(PolylogService.gpl_eval(GplWord((2,), z), ctx20), mpmath.log(1 - third / 2), 20)
        assert close(PolylogService.gpl_eval(GplWord((0, 0), z), ctx20), mpmath.log(third) ** 2 / 2, 20)
        assert close(PolylogService.gpl_eval(GplWord((0, 1), z), ctx20), -mpmath.polylog(2, third), 20)


def test_gpl_trailing_zero_regularization(ctx20):
    # G(1,0;z) = log(z)·log(1-z) + Li_2(z)
    z = rational(1, 3)
    with mpmath.workdps(40):
        third = mpmath.mpf(1) / 3
        expected = mpmath.log(third) * mpmath.log(1 - third) + mpmath.polylog(2, third)
        assert close(PolylogService.gpl_eval(GplWord((1, 0), z), ctx20), expected, 20)


def test_gpl_scaling_invariance(ctx20):
    small = PolylogService.gpl_eval(GplWord((1, rational(-1, 2)), rational(3, 4)), ctx20)
    large = PolylogService.gpl_eval(GplWord((2, -1), rational(3, 2)), ctx20)
    assert abs(small.value - large.value) < ctx20.tolerance


@pytest.mark.parametrize(
    "letters, arg",
    [
        ((2, rational(-1, 2)), rational(3, 4)),
        ((Rat(0, 1), 1, 3), rational(2, 3)),
        ((-1, Rat(1, 1)), Rat(0, Fraction(1, 2))),
    ],
)
def test_gpl_eval_matches_recursive_quadrature(ctx20, letters, arg):
    word = GplWord(letters, arg)
    direct = PolylogService.gpl_eval(word, ctx20)
    quadrature = ContourService.gpl_recursion_quadrature(word, ctx20)
    assert abs(direct.value - quadrature.value) < ctx20.mp.mpf(10) ** -18


def test_gpl_divergent_first_letter(ctx20):
    with pytest.raises(DivergentError):
        PolylogService.gpl_eval(GplWord((1, 2), 1), ctx20)


def test_gpl_with_leading_zero_near_the_origin(ctx20):
    # G(0,3;z) = -Li_2(z/3) también para |z| muy por debajo de eps
    z = Fraction(1, 10**40)
    value = PolylogService.gpl_eval(GplWord((0, 3), Rat(z)), ctx20).value
    with mpmath.workdps(40):
        expected = -mpmath.polylog(2, mpmath.mpf(z.numerator) / z.denominator / 3)
        got = mpmath.mpc(value.real, value.imag)
        assert abs(got - expected) <= mpmath.mpf(10) ** -18 * abs(expected)


def test_gpl_ending_in_zero_matches_recursive_quadrature(ctx20):
    word = GplWord((Rat(1, -1), Rat(Fraction(-3, 2), Fraction(-3, 4)), 0), rational(1))
    direct = PolylogService.gpl_eval(word, ctx20)
    quadrature = ContourService.gpl_recursion_quadrature(word, ctx20)
    assert abs(direct.value - quadrature.value) < ctx20.mp.mpf(10) ** -18


def random_letter(rng):
    """Letra gaussiana racional con 1 ≤ |a| ≤ 2."""
    while True:
        letter = Rat(Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4))
        if 1 <= letter.norm() <= 4:
            return letter


def random_argument(rng):
    """Argumento con 0 < |z| ≤ 0.8·|a| para toda letra no nula."""
    while True:
        z = Rat(Fraction(rng.randint(-8, 8), 10), Fraction(rng.randint(-8, 8), 10))
        if 0 < z.norm() <= Fraction(16, 25):
            return z


def random_convergent_words(count, seed):
    rng = random.Random(seed)
    words = []
    while len(words) < count:
        letters = [random_letter(rng) if rng.random() < 0.7 else 0 for _ in range(rng.randint(1, 3))]
        if len(words) % 2:
            letters[-1] = 0
        if all(letter == 0 for letter in letters):
            continue
        words.append(GplWord(tuple(letters), random_argument(rng)))
    return words


@pytest.mark.slow
@pytest.mark.parametrize("word", random_convergent_words(50, seed=2024), ids=lambda w: w.to_text())
def test_gpl_eval_matches_recursive_quadrature_on_random_words(ctx30, word):
    direct = PolylogService.gpl_eval(word, ctx30).value
    quadrature = ContourService.gpl_recursion_quadrature(word, ctx30).value
    assert abs(direct - quadrature) <= ctx30.mp.mpf(10) ** -28 * max(1, abs(quadrature))
