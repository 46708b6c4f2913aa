from fractions import Fraction

import pytest

from gossez.scalar import ONE, ZERO, format_rat, is_rational, parse_rat, rat


def test_construction_and_normalization():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(1, -2) == Fraction(-1, 2)
    assert rat(-4, 2).denominator == 1
    assert rat(Fraction(3, 9)) == Fraction(1, 3)
    assert ZERO == 0 and ONE == 1


def test_string_forms_round_trip():
    for text in ["0", "7", "-7", "1/2", "-3/4", "22/7"]:
        assert format_rat(parse_rat(text)) == text
    assert format_rat(rat(10, 5)) == "2"


@pytest.mark.parametrize("bad", ["", "1.5", "1/0", "1/-2", "--1", "a/2", "1e3", "1 2"])
def test_bad_literals_rejected(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_floats_and_bools_rejected():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(1, 2.0)
    with pytest.raises(TypeError):
        rat(True)
    assert not is_rational(0.5)
    assert not is_rational(True)
    assert is_rational(3) and is_rational(Fraction(1, 3))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_exact_arithmetic_closure():
    third = rat(1, 3)
    assert third + third + third == 1
    assert (rat(2, 7) * rat(7, 2)) == 1
    assert rat(1, 10) - rat(1, 10) == 0
    assert rat(5, 3) / rat(5, 3) == 1
