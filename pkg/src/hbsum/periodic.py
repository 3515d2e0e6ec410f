"""Periodized Bernoulli and Euler functions over the rationals.

Every branch on integer arguments goes through :func:`floor_frac`, so
negative inputs need no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import DomainError, RationalLike, as_rational, floor_frac, sgn
from .polys import bernoulli_poly, euler_poly

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PeriodicValue:
    value: Fraction
    at_integer_breakpoint: bool


def sawtooth(x: RationalLike) -> Fraction:
    """``((x))``: ``{x} - 1/2`` off the integers and ``0`` on them."""
    _, frac = floor_frac(x)
    return Fraction(0) if frac == 0 else frac - _HALF


@lru_cache(maxsize=1 << 16)
def _bernoulli_bar(n: int, x: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n == 1:
        return sawtooth(x)
    _, frac = floor_frac(x)
    return bernoulli_poly(n, frac)


@lru_cache(maxsize=1 << 16)
def _euler_bar(n: int, x: Fraction) -> Fraction:
    whole, frac = floor_frac(x)
    sign = -1 if whole % 2 else 1
    if n == 0:
        return Fraction(0) if frac == 0 else Fraction(sign)
    return sign * euler_poly(n, frac)


def bernoulli_bar(n: int, x: RationalLike) -> Fraction:
    """The 1-periodic Bernoulli function of order ``n``."""
    if n < 0:
        raise DomainError("order must be non-negative")
    return _bernoulli_bar(n, as_rational(x))


def euler_bar(n: int, x: RationalLike) -> Fraction:
    """The quasi-periodic Euler function ``(-1)^[x] E_n({x})``.

    Order zero vanishes at integers rather than taking the value ``(-1)^x``.
    """
    if n < 0:
        raise DomainError("order must be non-negative")
    return _euler_bar(n, as_rational(x))


def periodic_value(kind: str, n: int, x: RationalLike) -> PeriodicValue:
    """Evaluate ``kind`` in {"sawtooth", "bernoulli", "euler"} with the breakpoint flag.

    The flag records that an integer-argument special case was taken:
    the sawtooth (or order-1 Bernoulli function) at an integer, or the
    order-0 Euler function at an integer.
    """
    x = as_rational(x)
    on_integer = x.denominator == 1
    if kind == "sawtooth":
        return PeriodicValue(sawtooth(x), on_integer)
    if kind == "bernoulli":
        return PeriodicValue(bernoulli_bar(n, x), on_integer and n == 1)
    if kind == "euler":
        return PeriodicValue(euler_bar(n, x), on_integer and n == 0)
    raise DomainError(f"unknown periodic function {kind!r}")


def raabe_sum(n: int, a: int, x: RationalLike) -> Fraction:
    """``a^(n-1) * sum_{r<a} Bbar_n(x + r/a)``, which equals ``Bbar_n(a x)``."""
    if n < 1 or a < 1:
        raise DomainError("raabe_sum needs n >= 1 and a >= 1")
    x = as_rational(x)
    total = sum((bernoulli_bar(n, x + Fraction(r, a)) for r in range(a)), Fraction(0))
    return a ** (n - 1) * total


def distribution_sum(j: int, c: int, x: RationalLike) -> Fraction:
    """``sum_{r<|c|} Bbar_j((r + x)/c)``, which equals ``c^(1-j) sgn(c) Bbar_j(x)``."""
    if c == 0:
        raise DomainError("distribution_sum needs c != 0")
    if j < 1:
        raise DomainError("distribution_sum needs j >= 1")
    x = as_rational(x)
    return sum((bernoulli_bar(j, (r + x) / c) for r in range(abs(c))), Fraction(0))


def distribution_closed(j: int, c: int, x: RationalLike) -> Fraction:
    if c == 0:
        raise DomainError("distribution_closed needs c != 0")
    return Fraction(c) ** (1 - j) * sgn(c) * bernoulli_bar(j, x)
