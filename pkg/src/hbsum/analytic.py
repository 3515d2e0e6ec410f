"""Floating-point checks of the Fourier and bilateral-sum machinery.

Infinite symmetric sums are truncated at ``N`` pairs and, where the tail has
a usable asymptotic form, the tail is added back analytically:

* non-oscillating tails ``sum_{d>N} (d+s)^-j`` use the midpoint integral,
  with ``j/(12 (N+1/2-|s|)^(j+1))`` as the error estimate per side;
* oscillating tails ``sum_{d>N} w^d (d+s)^-j`` with ``w != 1`` use two steps
  of summation by parts; the remainder is bounded by ``|Delta g(N+1)|/|1-w|^2``.

Every result carries the estimated remaining error as ``tail_bound``; the
adaptive driver grows ``N`` until that bound meets the plan's tolerance.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable

import numpy as np

from .exact import DomainError, RationalLike, as_rational, floor_frac, sgn
from .periodic import bernoulli_bar, euler_bar

EPS = sys.float_info.epsilon
# headroom applied to double-precision roundoff estimates
ROUNDOFF_FACTOR = 64.0


@dataclass(frozen=True)
class ApproxComplex:
    real: float
    imag: float
    tail_bound: float
    terms: int = 0
    converged: bool = True

    def __post_init__(self):
        if not self.tail_bound >= 0:
            raise ValueError("tail_bound must be non-negative")

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    def close_to(self, exact: complex, tolerance: float) -> bool:
        return abs(self.value - exact) <= max(tolerance, self.tail_bound)


@dataclass(frozen=True)
class TruncationPlan:
    initial_terms: int = 1000
    growth_factor: float = 4.0
    max_terms: int = 1_000_000
    tolerance: float = 1e-6

    def __post_init__(self):
        if self.initial_terms < 1 or self.max_terms < 1:
            raise ValueError("term counts must be positive")
        if self.initial_terms > self.max_terms:
            raise ValueError("initial_terms must not exceed max_terms")
        if not self.growth_factor > 1:
            raise ValueError("growth_factor must exceed 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")

    @classmethod
    def default_for(cls, j: int) -> "TruncationPlan":
        return cls(tolerance=1e-4 if j == 1 else 1e-6)

    @classmethod
    def fixed(cls, terms: int, tolerance: float = 1e-3) -> "TruncationPlan":
        return cls(initial_terms=terms, max_terms=terms, tolerance=tolerance)

    def schedule(self, minimum: int = 1):
        n = max(self.initial_terms, min(minimum, self.max_terms))
        while True:
            yield n
            if n >= self.max_terms:
                return
            n = min(self.max_terms, max(n + 1, int(n * self.growth_factor)))


@dataclass
class CheckResult:
    check: str
    params: dict[str, Any]
    lhs: complex
    rhs: complex
    deviation: float
    bound: float
    tolerance: float
    passed: bool
    status: str = "ok"
    terms: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": {k: str(v) for k, v in self.params.items()},
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "deviation": self.deviation,
            "bound": self.bound,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "status": self.status,
            "terms": self.terms,
        }


def _adaptive(
    evaluate: Callable[[int], tuple[complex, float]], plan: TruncationPlan, minimum: int = 1
) -> ApproxComplex:
    value, bound, terms = 0j, math.inf, 0
    for terms in plan.schedule(minimum):
        value, bound = evaluate(terms)
        if bound <= plan.tolerance:
            return ApproxComplex(value.real, value.imag, bound, terms, True)
    return ApproxComplex(value.real, value.imag, bound, terms, False)


def _unit(x: Fraction) -> tuple[float, bool]:
    """Fractional part of ``x`` as a float, and whether ``x`` is an integer."""
    _, frac = floor_frac(x)
    return float(frac), frac == 0


def _abel_tail(g_first: float, sin_half: float) -> float:
    # |sum_{k>=M} w^k g(k)| <= 2 g(M)/|1-w| for decreasing g >= 0, |1-w| = 2|sin(pi x)|
    return g_first / sin_half if sin_half > 0 else math.inf


# Fourier expansions


def ebar_fourier(n: int, x: RationalLike, plan: TruncationPlan | None = None) -> ApproxComplex:
    """Symmetric partial sum of the Fourier series of the quasi-periodic Euler function.

    Summation runs over the half-integers ``h = k - 1/2`` with ``|h| < N``,
    paired as ``h`` and ``-h``.
    """
    if n < 0:
        raise DomainError("order must be non-negative")
    plan = plan or TruncationPlan(tolerance=1e-3)
    t, on_integer = _unit(as_rational(x))
    prefactor = 2 * factorial(n) / (2j * math.pi) ** (n + 1)
    sin_half = abs(math.sin(math.pi * t))
    power = n + 1

    def evaluate(terms: int) -> tuple[complex, float]:
        h = np.arange(terms, dtype=float) + 0.5
        phase = 2 * np.pi * h * t
        weights = h ** (-power)
        paired = 2 * (np.cos(phase) if power % 2 == 0 else 1j * np.sin(phase)) * weights
        total = complex(np.sum(paired)) * prefactor
        if n == 0 and on_integer:
            tail = 0.0
        else:
            g_next = (terms + 0.5) ** (-power)
            tail = 2 * _abel_tail(g_next, sin_half)
            if n >= 1:
                tail = min(tail, 2 / (n * terms**n))
        bound = abs(prefactor) * tail + ROUNDOFF_FACTOR * EPS * abs(prefactor) * 2 * float(np.sum(weights))
        return total, bound

    return _adaptive(evaluate, plan)


def bbar_fourier(n: int, x: RationalLike, plan: TruncationPlan | None = None) -> ApproxComplex:
    """Symmetric partial sum over ``0 < |k| <= N`` of the Bernoulli-function Fourier series."""
    if n < 1:
        raise DomainError("bbar_fourier needs n >= 1 (the k = 0 term is excluded)")
    plan = plan or TruncationPlan(tolerance=1e-3)
    t, on_integer = _unit(as_rational(x))
    prefactor = -factorial(n) / (2j * math.pi) ** n
    sin_half = abs(math.sin(math.pi * t))

    def evaluate(terms: int) -> tuple[complex, float]:
        k = np.arange(1, terms + 1, dtype=float)
        phase = 2 * np.pi * k * t
        weights = k ** (-n)
        paired = 2 * (np.cos(phase) if n % 2 == 0 else 1j * np.sin(phase)) * weights
        total = complex(np.sum(paired)) * prefactor
        if n == 1 and on_integer:
            tail = 0.0
        else:
            tail = 2 * _abel_tail((terms + 1.0) ** (-n), sin_half)
            if n >= 2:
                tail = min(tail, 2 / ((n - 1) * terms ** (n - 1)))
        bound = abs(prefactor) * tail + ROUNDOFF_FACTOR * EPS * abs(prefactor) * 2 * float(np.sum(weights))
        return total, bound

    return _adaptive(evaluate, plan)


# cot derivatives and the periodic zeta function


def cot_derivative_poly(order: int) -> list[Fraction]:
    """Coefficients ``q_i`` with ``d^order/da^order cot(pi a) = pi^order sum_i q_i t^i``, ``t = cot(pi a)``."""
    if order < 0:
        raise DomainError("order must be non-negative")
    coeffs = [Fraction(0), Fraction(1)]
    for _ in range(order):
        deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
        nxt = [Fraction(0)] * (len(deriv) + 2)
        for i, c in enumerate(deriv):
            nxt[i] -= c
            nxt[i + 2] -= c
        coeffs = nxt
    return coeffs


def cot_derivative(order: int, a: float | RationalLike) -> float:
    if isinstance(a, float):
        if a == math.floor(a):
            raise DomainError("cot(pi a) has a pole at integer a")
        af = a
    else:
        q = as_rational(a)
        if q.denominator == 1:
            raise DomainError("cot(pi a) has a pole at integer a")
        af = float(q)
    t = 1.0 / math.tan(math.pi * af)
    acc = 0.0
    for c in reversed(cot_derivative_poly(order)):
        acc = acc * t + float(c)
    return math.pi**order * acc


def _zeta_point(r: int, b: int) -> Fraction:
    return Fraction(r, b) - Fraction(1, 2 * b)


def periodic_zeta_closed(r: int, b: int, j: int) -> ApproxComplex:
    """Periodic zeta ``F(r/b - 1/(2b), 1 - j)`` from its finite Euler-function form."""
    if b == 0:
        raise DomainError("b must be nonzero")
    if j < 1:
        raise DomainError("j must be positive")
    size = abs(b)
    total = 0j
    scale = 0.0
    for l in range(size):
        ev = float(euler_bar(j - 1, Fraction(l, size)))
        total += cmath.exp(-2j * math.pi * l * r / b + 1j * math.pi * l / b) * ev
        scale += abs(ev)
    value = (-1) ** j / 2 * size ** (j - 1) * total - (0.5 if j == 1 else 0.0)
    bound = ROUNDOFF_FACTOR * EPS * (size ** (j - 1) * scale + 1)
    return ApproxComplex(value.real, value.imag, bound)


def representable_zeta_point(point: RationalLike) -> tuple[int, int] | None:
    """Find ``(r, b)`` with ``point == r/b - 1/(2b)``, or ``None`` if there is none.

    Such points are exactly the rationals whose reduced denominator is even.
    """
    q = as_rational(point)
    if q.denominator % 2:
        return None
    b = q.denominator // 2
    r = (q.numerator + 1) // 2
    return r, b


def lemma24_check(
    j: int, point: RationalLike | None = None, *, r: int | None = None, b: int | None = None,
    tolerance: float = 1e-9,
) -> CheckResult:
    """Compare the ``(j-1)``-th derivative of ``cot(pi a)`` with its periodic-zeta form."""
    if j < 1:
        raise DomainError("j must be positive")
    if point is None:
        if r is None or b is None:
            raise DomainError("give either a point or both r and b")
        if b == 0:
            raise DomainError("b must be nonzero")
        point = _zeta_point(r, b)
    point = as_rational(point)
    params: dict[str, Any] = {"j": j, "point": point}
    if point.denominator == 1:
        raise DomainError("cot(pi a) has a pole at integer a")
    rb = representable_zeta_point(point)
    if rb is None:
        nan = complex(math.nan, math.nan)
        return CheckResult("lemma24", params, nan, nan, math.nan, math.nan, tolerance, False,
                           status="unsupported-point")
    r, b = rb
    params.update(r=r, b=b)
    lhs = cot_derivative(j - 1, point)
    zeta = periodic_zeta_closed(r, b, j)
    rhs = (1 / 1j if j == 1 else 0) + 2**j * math.pi ** (j - 1) * (1j) ** (j - 2) * zeta.value
    coeffs = cot_derivative_poly(j - 1)
    t = abs(1.0 / math.tan(math.pi * float(point)))
    lhs_scale = math.pi ** (j - 1) * sum(abs(float(c)) * t**i for i, c in enumerate(coeffs))
    bound = ROUNDOFF_FACTOR * EPS * (lhs_scale + 2**j * math.pi ** (j - 1) * (abs(zeta.value) + 1)) \
        + 2**j * math.pi ** (j - 1) * zeta.tail_bound
    deviation = abs(lhs - rhs)
    passed = deviation <= max(tolerance, bound) and bound <= tolerance
    return CheckResult("lemma24", params, complex(lhs), rhs, deviation, bound, tolerance, passed)


# bilateral sums


def _oscillating_tail(w: complex, shift: float, j: int, start: int) -> tuple[complex, float]:
    """Approximate ``sum_{d>=start} w^d (d+shift)^-j`` for ``w != 1``."""
    g0 = (start + shift) ** (-j)
    g1 = (start + 1 + shift) ** (-j)
    one_minus = 1 - w
    wm = w**start
    estimate = wm * g0 / one_minus + wm * w * (g1 - g0) / one_minus**2
    bound = abs(g1 - g0) / abs(one_minus) ** 2
    return estimate, bound


def bilateral_sum(j: int, shift: float, x: RationalLike, terms: int) -> tuple[complex, float]:
    """``sum_{|d|<=N} e^(2 pi i d x)/(d+shift)^j`` plus an analytic tail, with its error estimate."""
    t, on_integer = _unit(as_rational(x))
    d = np.arange(1, terms + 1, dtype=float)
    if on_integer:
        pos = (d + shift) ** (-j)
        neg = (-1) ** j * (d - shift) ** (-j)
        body = shift ** (-j) + float(np.sum(pos + neg))
        edge = terms + 0.5
        if j == 1:
            tail = math.log((edge - shift) / (edge + shift))
        else:
            tail = ((edge + shift) ** (1 - j) + (-1) ** j * (edge - shift) ** (1 - j)) / (j - 1)
        bound = 2 * j / (12 * (edge - abs(shift)) ** (j + 1))
        roundoff = ROUNDOFF_FACTOR * EPS * (abs(shift) ** (-j) + float(np.sum(np.abs(pos) + np.abs(neg))))
        return complex(body + tail), bound + roundoff
    w = cmath.exp(2j * math.pi * t)
    phase = 2 * np.pi * d * t
    pos = np.exp(1j * phase) * (d + shift) ** (-j)
    neg = np.exp(-1j * phase) * (-1) ** j * (d - shift) ** (-j)
    body = shift ** (-j) + complex(np.sum(pos + neg))
    tail_pos, bound_pos = _oscillating_tail(w, shift, j, terms + 1)
    tail_neg, bound_neg = _oscillating_tail(w.conjugate(), -shift, j, terms + 1)
    roundoff = ROUNDOFF_FACTOR * EPS * (abs(shift) ** (-j) + float(np.sum(np.abs(pos) + np.abs(neg))))
    return body + tail_pos + (-1) ** j * tail_neg, bound_pos + bound_neg + roundoff


def _bilateral_adaptive(j: int, shift: float, x: Fraction, plan: TruncationPlan) -> ApproxComplex:
    # keep d - shift away from zero in the tail formulas
    minimum = int(2 * abs(shift)) + 2
    return _adaptive(lambda terms: bilateral_sum(j, shift, x, terms), plan, minimum)


def lemma25_rhs(j: int, b: int, r: int) -> complex:
    total = 0j
    for l in range(abs(b)):
        ev = float(euler_bar(j - 1, Fraction(l, b)))
        total += cmath.exp(-2j * math.pi * l * r / b + 1j * math.pi * l / b) * ev
    return (2j * math.pi) ** j * sgn(b) / (2 * factorial(j - 1)) * float(b) ** (j - 1) * total


def lemma27_rhs(j: int, b: int, r: int, x: RationalLike) -> complex:
    x = as_rational(x)
    total = 0j
    for l in range(abs(b)):
        arg = (l + x) / b
        ev = float(euler_bar(j - 1, arg))
        lx = float(l + x)
        total += cmath.exp(-2j * math.pi * lx * r / b + 1j * math.pi * lx / b) * ev
    return (2j * math.pi) ** j * sgn(b) / (2 * factorial(j - 1)) * float(b) ** (j - 1) * total


def _bilateral_check(
    name: str, j: int, b: int, r: int, x: Fraction, plan: TruncationPlan | None, rhs: complex
) -> CheckResult:
    plan = plan or TruncationPlan.default_for(j)
    shift = float(_zeta_point(r, b))
    approx = _bilateral_adaptive(j, shift, x, plan)
    params: dict[str, Any] = {"j": j, "b": b, "r": r}
    if name == "lemma27":
        params["x"] = x
    rhs_roundoff = ROUNDOFF_FACTOR * EPS * (2 * math.pi) ** j * abs(b) ** j
    bound = approx.tail_bound + rhs_roundoff
    deviation = abs(approx.value - rhs)
    passed = approx.converged and deviation <= max(plan.tolerance, bound)
    status = "ok" if approx.converged else "non-convergence"
    return CheckResult(name, params, approx.value, rhs, deviation, bound, plan.tolerance, passed,
                       status=status, terms=approx.terms)


def _check_bilateral_args(j: int, b: int) -> None:
    if j < 1:
        raise DomainError("j must be positive")
    if b == 0:
        raise DomainError("b must be nonzero")


def lemma25_check(j: int, b: int, r: int, plan: TruncationPlan | None = None) -> CheckResult:
    """Bilateral sum of ``(d + r/b - 1/(2b))^-j`` against its finite Euler-function form."""
    _check_bilateral_args(j, b)
    return _bilateral_check("lemma25", j, b, r, Fraction(0), plan, lemma25_rhs(j, b, r))


def lemma27_check(
    j: int, b: int, r: int, x: RationalLike, plan: TruncationPlan | None = None
) -> CheckResult:
    """Twisted bilateral sum with ``e^(2 pi i d x)`` against its finite Euler-function form."""
    _check_bilateral_args(j, b)
    x = as_rational(x)
    return _bilateral_check("lemma27", j, b, r, x, plan, lemma27_rhs(j, b, r, x))


def fourier_check(kind: str, n: int, x: RationalLike, plan: TruncationPlan | None = None) -> CheckResult:
    """Compare a truncated Fourier series with the exact periodic function value."""
    x = as_rational(x)
    plan = plan or TruncationPlan(tolerance=1e-3)
    if kind == "ebar":
        approx = ebar_fourier(n, x, plan)
        exact = float(euler_bar(n, x))
    elif kind == "bbar":
        approx = bbar_fourier(n, x, plan)
        exact = float(bernoulli_bar(n, x))
    else:
        raise DomainError(f"unknown Fourier series {kind!r}")
    deviation = abs(approx.value - exact)
    passed = approx.converged and deviation <= max(plan.tolerance, approx.tail_bound)
    status = "ok" if approx.converged else "non-convergence"
    return CheckResult(f"{kind}-fourier", {"n": n, "x": x}, approx.value, complex(exact),
                       deviation, approx.tail_bound, plan.tolerance, passed, status=status,
                       terms=approx.terms)
