import math
import random
from fractions import Fraction

import pytest

from hbsum.analytic import (
    ApproxComplex,
    TruncationPlan,
    bbar_fourier,
    bilateral_sum,
    cot_derivative,
    ebar_fourier,
    fourier_check,
    lemma24_check,
    lemma25_check,
    lemma27_check,
    periodic_zeta_closed,
    representable_zeta_point,
)
from hbsum.exact import DomainError
from hbsum.periodic import bernoulli_bar, euler_bar


def test_truncation_plan_validation():
    with pytest.raises(ValueError):
        TruncationPlan(initial_terms=10, max_terms=5)
    with pytest.raises(ValueError):
        TruncationPlan(growth_factor=1.0)
    assert list(TruncationPlan(initial_terms=10, growth_factor=4, max_terms=200).schedule()) == [10, 40, 160, 200]


def test_default_plans():
    assert TruncationPlan.default_for(1).tolerance == 1e-4
    assert TruncationPlan.default_for(3).tolerance == 1e-6
    plan = TruncationPlan.default_for(2)
    assert (plan.initial_terms, plan.growth_factor, plan.max_terms) == (1000, 4.0, 1_000_000)


def test_approx_complex_rejects_negative_bound():
    with pytest.raises(ValueError):
        ApproxComplex(0.0, 0.0, -1.0)


def test_ebar_fourier_examples():
    approx = ebar_fourier(1, Fraction(1, 4), TruncationPlan.fixed(10_000))
    assert abs(approx.value - (-0.25)) < 1e-3
    assert abs(ebar_fourier(0, Fraction(1, 2)).value - 1) < 1e-3
    assert abs(ebar_fourier(2, 0).value - 0) < 1e-3


def test_bbar_fourier_examples():
    for terms in (1, 7, 1000):
        assert bbar_fourier(1, 0, TruncationPlan.fixed(terms)).value == 0
    assert abs(bbar_fourier(2, Fraction(1, 3), TruncationPlan.fixed(10_000)).value + 1 / 18) < 1e-3
    assert abs(bbar_fourier(1, Fraction(1, 4)).value + 0.25) < 1e-3


def test_bbar_fourier_requires_positive_order():
    with pytest.raises(DomainError):
        bbar_fourier(0, Fraction(1, 3))


def test_fourier_random_points():
    rng = random.Random(12)
    for _ in range(20):
        x = Fraction(rng.randint(1, 28), 29) if rng.random() < 0.5 else Fraction(rng.randint(1, 10), 11)
        for n in range(5):
            e = fourier_check("ebar", n, x)
            assert e.passed, e
            assert abs(e.lhs.imag) <= e.tolerance
            if n >= 1:
                b = fourier_check("bbar", n, x)
                assert b.passed, b
                assert abs(b.lhs.imag) <= b.tolerance


def test_fourier_bound_dominates_deviation():
    for n in range(5):
        for x in (Fraction(1, 7), Fraction(1, 2), Fraction(5, 6)):
            for terms in (100, 400, 1600):
                approx = ebar_fourier(n, x, TruncationPlan.fixed(terms))
                assert abs(approx.value - float(euler_bar(n, x))) <= 10 * approx.tail_bound + 1e-15
                if n:
                    approx = bbar_fourier(n, x, TruncationPlan.fixed(terms))
                    assert abs(approx.value - float(bernoulli_bar(n, x))) <= 10 * approx.tail_bound + 1e-15


@pytest.mark.parametrize(
    "order, a, expected", [(0, Fraction(1, 4), 1.0), (0, Fraction(1, 2), 0.0), (1, Fraction(1, 2), -math.pi)]
)
def test_cot_derivative_examples(order, a, expected):
    assert cot_derivative(order, a) == pytest.approx(expected, abs=1e-12)


def test_cot_derivative_against_finite_differences():
    a, h = 0.3, 1e-4
    f = lambda t: 1 / math.tan(math.pi * t)  # noqa: E731
    assert cot_derivative(1, a) == pytest.approx((f(a + h) - f(a - h)) / (2 * h), rel=1e-6)
    assert cot_derivative(2, a) == pytest.approx((f(a + h) - 2 * f(a) + f(a - h)) / h**2, rel=1e-5)


def test_cot_derivative_pole():
    with pytest.raises(DomainError):
        cot_derivative(0, 2)


def test_periodic_zeta_closed_small_cases():
    # |b| = 1 leaves the single l = 0 term: Ebar_1(0) / 2 = -1/4
    assert periodic_zeta_closed(0, 1, 2).value == pytest.approx(-0.25)
    # j = 1: Ebar_0(0) = 0, so only the -1/2 correction remains
    assert periodic_zeta_closed(0, 1, 1).value == pytest.approx(-0.5)


def test_representable_points():
    assert representable_zeta_point(Fraction(1, 2)) == (1, 1)
    r, b = representable_zeta_point(Fraction(-7, 10))
    assert Fraction(r, b) - Fraction(1, 2 * b) == Fraction(-7, 10)
    assert representable_zeta_point(Fraction(1, 3)) is None


@pytest.mark.parametrize("j, r, b", [(2, 1, 1), (1, 1, 3), (4, 2, 5)])
def test_lemma24_examples(j, r, b):
    result = lemma24_check(j, r=r, b=b)
    assert result.passed
    assert result.deviation < 1e-9


def test_lemma24_unsupported_point():
    result = lemma24_check(2, Fraction(1, 3))
    assert result.status == "unsupported-point"
    assert not result.passed


def test_lemma25_pi_squared():
    result = lemma25_check(2, 1, 0)
    assert result.passed
    assert abs(result.lhs - math.pi**2) < 1e-6
    assert abs(result.rhs - math.pi**2) < 1e-12


def test_lemma25_examples():
    result = lemma25_check(1, 1, 0)
    assert result.passed and abs(result.lhs) < 1e-4 and abs(result.rhs) < 1e-12
    assert lemma25_check(3, 3, 1).deviation < 1e-6


def test_lemma25_forced_non_convergence():
    result = lemma25_check(1, 2, 1, TruncationPlan(initial_terms=10, max_terms=10, tolerance=1e-4))
    assert result.status == "non-convergence"
    assert not result.passed


def test_lemma27_examples():
    assert lemma27_check(2, 1, 0, Fraction(1, 3)).deviation < 1e-6
    result = lemma27_check(1, 3, 1, Fraction(1, 4))
    assert result.passed and result.deviation < 1e-4


def test_lemma27_reduces_to_lemma25_at_integer_twist():
    for j, b, r in [(1, 3, 1), (2, -4, 3), (3, 5, -2), (4, 1, 0)]:
        base = lemma25_check(j, b, r)
        for x in (0, 2, -3):
            twisted = lemma27_check(j, b, r, x)
            assert abs(twisted.lhs - base.lhs) <= 1e-12 * max(1, abs(base.lhs))
            assert abs(twisted.rhs - base.rhs) <= 1e-12 * max(1, abs(base.rhs))


def test_lemma_suites_randomized():
    rng = random.Random(21)
    for _ in range(60):
        j = rng.randint(1, 4)
        b = rng.choice([v for v in range(-5, 6) if v])
        r = rng.randint(-5, 5)
        x = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        tol = 1e-4 if j == 1 else 1e-6
        for result in (
            lemma24_check(j, r=r, b=b, tolerance=tol),
            lemma25_check(j, b, r),
            lemma27_check(j, b, r, x),
        ):
            assert result.passed, result
            assert result.deviation <= 10 * result.bound, result


def test_bilateral_truncation_bound_tracks_error():
    # the estimated error after tail correction must dominate the true error as N grows
    exact = math.pi**2
    for terms in (10, 40, 160, 640):
        value, bound = bilateral_sum(2, -0.5, 0, terms)
        assert abs(value - exact) <= 10 * bound
