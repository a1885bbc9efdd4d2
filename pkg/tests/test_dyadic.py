from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from resclose.dyadic import Dyadic, DyadicError, ZERO

dyadics = st.builds(Dyadic, st.integers(-(2**60), 2**60), st.integers(0, 60))


def test_canonical_form():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(4, 2).exponent == 0
    assert Dyadic(0, 9).exponent == 0
    assert Dyadic(19, 1).numerator == 19


def test_parse_forms():
    assert Dyadic.parse("19/2") == Fraction(19, 2)
    assert Dyadic.parse("219/2^3") == Fraction(219, 8)
    assert Dyadic.parse("-3") == -3
    assert Dyadic.parse("27.375") == Fraction(219, 8)
    with pytest.raises(DyadicError):
        Dyadic.parse("0.1")
    with pytest.raises(DyadicError):
        Dyadic.parse("1/3")
    with pytest.raises(DyadicError):
        Dyadic.parse("abc")


def test_from_fraction_rejects_non_dyadic():
    with pytest.raises(DyadicError):
        Dyadic.from_fraction(Fraction(1, 6))
    assert Dyadic.from_fraction(Fraction(3, 4)) == Dyadic(3, 2)


def test_rendering():
    assert Dyadic(19, 1).fraction_str() == "19/2"
    assert Dyadic(16).fraction_str() == "16"
    assert Dyadic(219, 3).decimal_str() == "27.375"
    assert Dyadic(-1, 2).decimal_str() == "-0.25"
    assert str(ZERO) == "0"


def test_overflow_is_detected():
    with pytest.raises(OverflowError):
        Dyadic(1 << 127)
    big = Dyadic(1 << 126)
    with pytest.raises(OverflowError):
        big + big


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)


@given(dyadics)
def test_string_round_trip(a):
    assert Dyadic.parse(a.fraction_str()) == a
    assert Fraction(a.decimal_str()) == a.to_fraction()
    assert hash(a) == hash(a.to_fraction())
