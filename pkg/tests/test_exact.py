from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hardysums.exact import INF, DomainError, floor_q, gcd, parse_rational, render, sawtooth, sign

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize("a,b,g", [(0, 0, 0), (12, 18, 6), (-12, 18, 6), (7, 0, 7), (1, 10**40, 1)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


@pytest.mark.parametrize("n,s", [(-5, -1), (0, 0), (3, 1), (Fraction(-1, 3), -1)])
def test_sign(n, s):
    assert sign(n) == s


@pytest.mark.parametrize("x,f", [(Fraction(7, 2), 3), (Fraction(-7, 2), -4), (5, 5), (Fraction(-1, 10**30), -1)])
def test_floor(x, f):
    assert floor_q(x) == f


@pytest.mark.parametrize("x,s", [(Fraction(1, 4), Fraction(-1, 4)), (3, 0), (Fraction(-1, 3), Fraction(1, 6))])
def test_sawtooth_values(x, s):
    assert sawtooth(x) == s


@given(rationals)
def test_sawtooth_odd_and_periodic(x):
    assert sawtooth(-x) == -sawtooth(x)
    assert sawtooth(x + 1) == sawtooth(x)
    assert -Fraction(1, 2) < sawtooth(x) < Fraction(1, 2)


@given(rationals)
def test_render_parse_round_trip(x):
    assert parse_rational(render(x)) == x


@pytest.mark.parametrize("text", ["oo", "inf", " Infinity "])
def test_parse_infinity(text):
    assert parse_rational(text) is INF
    assert render(INF) == "oo"


@pytest.mark.parametrize("text", ["1/0", "x", "1/2/3", "", "0.5"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        parse_rational(text)


def test_parse_normalises():
    assert parse_rational("6/-4") == Fraction(-3, 2)
    assert render(Fraction(-3, 2)) == "-3/2"
