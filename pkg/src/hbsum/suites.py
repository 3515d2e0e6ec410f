"""Randomized exact identity suites for the periodic functions and polynomials."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .periodic import (
    bernoulli_bar,
    distribution_closed,
    distribution_sum,
    euler_bar,
    raabe_sum,
)
from .polys import (
    bernoulli_number,
    bernoulli_poly,
    euler_at_zero_from_bernoulli,
    euler_poly,
    euler_poly_closed,
)


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.instances > 0 and not self.failures

    def record(self, ok: bool, *case) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(case)


def random_rational(rng: random.Random, span: int = 20, max_den: int = 30) -> Fraction:
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def raabe_suite(rng: random.Random, samples: int = 50) -> SuiteResult:
    res = SuiteResult("raabe")
    for n in range(1, 7):
        for a in range(1, 9):
            for _ in range(samples):
                x = random_rational(rng)
                res.record(raabe_sum(n, a, x) == bernoulli_bar(n, a * x), n, a, x)
    return res


def distribution_suite(rng: random.Random, samples: int = 50) -> SuiteResult:
    res = SuiteResult("distribution")
    for j in range(1, 7):
        for c in [v for v in range(-6, 7) if v]:
            for _ in range(samples):
                x = random_rational(rng)
                res.record(distribution_sum(j, c, x) == distribution_closed(j, c, x), j, c, x)
    return res


def euler_reflection_suite(rng: random.Random, samples: int = 200) -> SuiteResult:
    res = SuiteResult("euler_bar_reflection")
    for i in range(samples):
        n = rng.randint(0, 8)
        # every fourth sample sits on an integer, where the reflection has no sign
        x = Fraction(rng.randint(-20, 20)) if i % 4 == 0 else random_rational(rng)
        expected = euler_bar(n, x) if x.denominator == 1 else (-1) ** (n + 1) * euler_bar(n, x)
        res.record(euler_bar(n, -x) == expected, n, x)
    return res


def bernoulli_reflection_suite(rng: random.Random, samples: int = 200) -> SuiteResult:
    res = SuiteResult("bernoulli_bar_reflection")
    for i in range(samples):
        n = rng.randint(1, 8)
        x = Fraction(rng.randint(-20, 20)) if i % 4 == 0 else random_rational(rng)
        res.record(bernoulli_bar(n, -x) == (-1) ** n * bernoulli_bar(n, x), n, x)
    return res


def periodicity_suite(rng: random.Random, samples: int = 200) -> SuiteResult:
    res = SuiteResult("periodicity")
    for i in range(samples):
        n = rng.randint(0, 8)
        x = Fraction(rng.randint(-20, 20)) if i % 5 == 0 else random_rational(rng)
        res.record(bernoulli_bar(n, x + 1) == bernoulli_bar(n, x), "B", n, x)
        res.record(euler_bar(n, x + 1) == -euler_bar(n, x), "E", n, x)
    return res


def difference_equation_suite(rng: random.Random, samples: int = 200) -> SuiteResult:
    res = SuiteResult("difference_equations")
    for _ in range(samples):
        n = rng.randint(0, 12)
        x = random_rational(rng, span=5)
        b_ok = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == (n * x ** (n - 1) if n else 0)
        e_ok = euler_poly(n, x + 1) + euler_poly(n, x) == 2 * x**n
        reflect_ok = euler_poly(n, 1 - x) == (-1) ** n * euler_poly(n, x)
        res.record(b_ok and e_ok and reflect_ok, n, x)
    return res


def special_values_suite() -> SuiteResult:
    res = SuiteResult("special_values")
    for j in range(1, 13):
        res.record(euler_poly(j - 1, 0) == euler_at_zero_from_bernoulli(j), "E0", j)
    for j in range(1, 7):
        res.record(bernoulli_number(2 * j + 1) == 0, "B_odd", j)
    return res


def euler_oracle_suite(rng: random.Random, samples: int = 50) -> SuiteResult:
    res = SuiteResult("euler_dual_method")
    for n in range(13):
        for _ in range(samples):
            x = random_rational(rng, span=5)
            res.record(euler_poly(n, x) == euler_poly_closed(n, x), n, x)
    return res


def run_identity_suites(seed: int = 0, samples: int = 200) -> list[SuiteResult]:
    """Run every suite with one seeded generator; ``samples`` scales the random ones."""
    rng = random.Random(seed)
    per_cell = max(1, samples // 4)
    return [
        raabe_suite(rng, per_cell),
        distribution_suite(rng, per_cell),
        euler_reflection_suite(rng, samples),
        bernoulli_reflection_suite(rng, samples),
        periodicity_suite(rng, samples),
        difference_equation_suite(rng, samples),
        special_values_suite(),
        euler_oracle_suite(rng, per_cell),
    ]


__all__ = [
    "SuiteResult",
    "random_rational",
    "run_identity_suites",
]
