from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbsum.exact import (
    DomainError,
    delta_int,
    evaluate_partial_fractions,
    floor_frac,
    gcd,
    make_rational,
    neg_one_pow,
    parse_rational,
    partial_fraction_split,
    sgn,
)

rationals = st.fractions(max_denominator=1000)


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, -4, Fraction(-1, 2)), (0, 7, Fraction(0)), (6, 3, Fraction(2))],
)
def test_make_rational_reduces(num, den, expected):
    q = make_rational(num, den)
    assert q == expected
    assert q.denominator > 0


def test_make_rational_zero_denominator():
    with pytest.raises(DomainError):
        make_rational(1, 0)


@pytest.mark.parametrize("text, expected", [("4/6", Fraction(2, 3)), ("-3", Fraction(-3)), (" 7/-1 ", None)])
def test_parse_rational(text, expected):
    if expected is None:
        with pytest.raises(DomainError):
            parse_rational(text)
    else:
        assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b"])
def test_parse_rational_rejects_inexact_and_malformed(text):
    with pytest.raises(DomainError):
        parse_rational(text)


@pytest.mark.parametrize(
    "q, expected",
    [(Fraction(7, 3), (2, Fraction(1, 3))), (Fraction(-7, 3), (-3, Fraction(2, 3))), (Fraction(5), (5, Fraction(0)))],
)
def test_floor_frac_examples(q, expected):
    assert floor_frac(q) == expected


@settings(max_examples=500)
@given(rationals)
def test_floor_frac_reconstructs(q):
    whole, frac = floor_frac(q)
    assert whole + frac == q
    assert 0 <= frac < 1
    assert isinstance(whole, int)


@pytest.mark.parametrize("a, b, expected", [(3, 9, 3), (-4, 6, 2), (1, 1, 1), (0, 0, 0)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("q, expected", [(Fraction(-5, 3), -1), (Fraction(0), 0), (Fraction(9), 1)])
def test_sgn(q, expected):
    assert sgn(q) == expected


@pytest.mark.parametrize("q, expected", [(5, -1), (0, 1), (-3, -1), (-4, 1)])
def test_neg_one_pow(q, expected):
    assert neg_one_pow(q) == expected


def test_neg_one_pow_rejects_fraction():
    with pytest.raises(DomainError):
        neg_one_pow(Fraction(1, 2))


@pytest.mark.parametrize("q, expected", [(Fraction(4, 2), 1), (Fraction(1, 3), 0), (Fraction(0), 1)])
def test_delta_int(q, expected):
    assert delta_int(q) == expected


@given(st.integers(-10**40, 10**40), st.integers(1, 10**40), st.integers(-10**40, 10**40), st.integers(1, 10**40))
def test_arithmetic_preserves_reduction(p1, q1, p2, q2):
    a, b = make_rational(p1, q1), make_rational(p2, q2)
    results = [a + b, a - b, a * b] + ([a / b] if b else [])
    for r in results:
        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1


def test_partial_fraction_unit_case():
    x, y = Fraction(1), Fraction(2)
    c, e = partial_fraction_split(1, 1, x, y)
    assert c == [1 / (x - y)]
    assert e == [1 / (y - x)]
    # at d = 0: 1/((0-1)(0-2)) = 1/2
    assert evaluate_partial_fractions(c, e, x, y, 0) == Fraction(1, 2)


def test_partial_fraction_m2_n1():
    c, e = partial_fraction_split(2, 1, 0, 1)
    d = Fraction(3)
    assert evaluate_partial_fractions(c, e, 0, 1, d) == 1 / ((d - 0) ** 2 * (d - 1))


def test_partial_fraction_equal_poles():
    with pytest.raises(DomainError):
        partial_fraction_split(1, 2, Fraction(1, 3), Fraction(1, 3))


@settings(max_examples=200)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.builds(Fraction, st.integers(-500, 500), st.integers(1, 20)),
    st.builds(Fraction, st.integers(-500, 500), st.integers(1, 20)),
    st.builds(Fraction, st.integers(-500, 500), st.integers(1, 20)),
)
def test_partial_fraction_reconstruction(m, n, x, y, d):
    if x == y or d in (x, y):
        return
    c, e = partial_fraction_split(m, n, x, y)
    assert evaluate_partial_fractions(c, e, x, y, d) == 1 / ((d - x) ** m * (d - y) ** n)
