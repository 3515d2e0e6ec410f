"""Dedekind, Hardy-Berndt and generalized Hardy-Berndt sums.

The summation index ``r`` always runs over ``0..|c|-1`` and the alternating
sign is applied to ``r`` itself, also when the modulus is negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, RationalLike, as_rational
from .periodic import bernoulli_bar, euler_bar, sawtooth


@dataclass(frozen=True)
class SumSpec:
    """Parameters of the generalized sum, laid out as the matrix (a b c / x y z)."""

    m: int
    n: int
    a: int
    b: int
    c: int
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise DomainError("orders m, n must be non-negative")
        if self.c == 0:
            raise DomainError("modulus c must be nonzero")
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))


def _check_modulus(modulus: int, name: str) -> None:
    if modulus == 0:
        raise DomainError(f"{name} must be nonzero")


def dedekind_sum(a: int, b: int) -> Fraction:
    _check_modulus(b, "b")
    return sum(
        (sawtooth(Fraction(r, b)) * sawtooth(Fraction(a * r, b)) for r in range(abs(b))),
        Fraction(0),
    )


def hardy_s5(a: int, b: int) -> Fraction:
    """Hardy's alternating sum ``sum_r (-1)^(r + [ar/b]) ((r/b))``."""
    _check_modulus(b, "b")
    total = Fraction(0)
    for r in range(abs(b)):
        term = sawtooth(Fraction(r, b))
        total += -term if (r + (a * r) // b) % 2 else term
    return total


def hardy_s5_three(a: int, b: int, c: int) -> Fraction:
    _check_modulus(c, "c")
    total = Fraction(0)
    for r in range(abs(c)):
        term = sawtooth(Fraction(b * r, c))
        total += -term if (r + (a * r) // c) % 2 else term
    return total


def generalized_s5(spec: SumSpec) -> Fraction:
    """``sum_r (-1)^r Ebar_m(a(r+z)/c - x) Bbar_n(b(r+z)/c - y)``."""
    m, n, a, b, c = spec.m, spec.n, spec.a, spec.b, spec.c
    x, y, z = spec.x, spec.y, spec.z
    total = Fraction(0)
    for r in range(abs(c)):
        shifted = (r + z) / c
        term = euler_bar(m, a * shifted - x) * bernoulli_bar(n, b * shifted - y)
        total += -term if r % 2 else term
    return total


def gen_s5(
    m: int, n: int, a: int, b: int, c: int,
    x: RationalLike = 0, y: RationalLike = 0, z: RationalLike = 0,
) -> Fraction:
    """Keyword-friendly wrapper around :func:`generalized_s5`."""
    return generalized_s5(SumSpec(m, n, a, b, c, as_rational(x), as_rational(y), as_rational(z)))
