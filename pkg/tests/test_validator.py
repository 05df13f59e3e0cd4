from fractions import Fraction

import pytest

from app.models.expression.constant_expr import ExpIPi, Rat, Sqrt
from app.utils.named_constant import NamedConstant
from app.utils.validator import (
    parse_constant,
    parse_int,
    parse_letters,
    parse_point,
    validate_data,
    validate_digits,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/2", Rat(Fraction(1, 2))),
        ("-3", Rat(-3)),
        ("0.25", Rat(Fraction(1, 4))),
        ("1e-3", Rat(Fraction(1, 1000))),
        ("i", Rat(0, 1)),
        ("-i", Rat(0, -1)),
        ("2i", Rat(0, 2)),
        ("0.5i", Rat(0, Fraction(1, 2))),
        ("1+i", Rat(1, 1)),
        ("0.5 - 0.25i", Rat(Fraction(1, 2), Fraction(-1, 4))),
        ("3-2i", Rat(3, -2)),
    ],
)
def test_parse_point_rectangular(text, expected):
    assert parse_point(text) == expected


def test_parse_point_exponential_and_root():
    assert parse_point("exp(i*pi*1/6)") == ExpIPi(Fraction(1, 6))
    assert parse_point("exp(i*pi)") == ExpIPi(Fraction(1))
    assert parse_point("sqrt(5)") == Sqrt(Fraction(5))


@pytest.mark.parametrize("text", ["", "abc", "1/0i", "exp(i*pi*1/0)", "sqrt(0)", "2ii", "1+", "--1"])
def test_parse_point_rejects_garbage(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_point(text)


def test_parse_point_requires_text():
    with pytest.raises(TypeError):
        parse_point(0.5)


def test_parse_letters():
    assert parse_letters("0,1,-1") == (Rat(0), Rat(1), Rat(-1))
    assert parse_letters("1/2, i") == (Rat(Fraction(1, 2)), Rat(0, 1))
    with pytest.raises(ValueError):
        parse_letters(" ")


def test_parse_int_bounds():
    assert parse_int("3", "k", minimum=0) == 3
    with pytest.raises(ValueError):
        parse_int("x", "k")
    with pytest.raises(ValueError):
        parse_int("-1", "k", minimum=0)
    with pytest.raises(ValueError):
        parse_int("9", "s", maximum=6)


def test_validate_digits():
    assert validate_digits("40") == 40
    with pytest.raises(ValueError):
        validate_digits("5")


def test_parse_constant():
    assert parse_constant("beta4") == NamedConstant.BETA4
    with pytest.raises(ValueError):
        parse_constant("gamma")


def test_validate_data():
    assert validate_data({"digits": 30, "jobs": 2}, {"digits": int, "jobs": int})
    with pytest.raises(ValueError):
        validate_data({"digits": 30}, {"digits": int, "jobs": int})
    with pytest.raises(TypeError):
        validate_data({"digits": "30"}, {"digits": int})
    with pytest.raises(TypeError):
        validate_data({"digits": True}, {"digits": int})
