"""Exact rational primitives shared by every other module.

Values are :class:`fractions.Fraction` instances: immutable, always reduced,
denominator positive. Floors round toward minus infinity, so the fractional
part of a negative number lies in [0, 1) (``{-7/3} = 2/3``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from math import comb
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_TEXT = re.compile(r"\A\s*([+-]?\d+)(?:/(\d+))?\s*\Z")


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


def make_rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and exponent forms are rejected."""
    match = _RATIONAL_TEXT.match(text)
    if match is None:
        raise DomainError(f"not a rational literal of the form p/q: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    return make_rational(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q)


def floor_frac(q: RationalLike) -> tuple[int, Fraction]:
    """Return ``([q], {q})`` with ``[q] + {q} == q`` and ``0 <= {q} < 1``."""
    q = as_rational(q)
    whole = q.numerator // q.denominator
    return whole, q - whole


def gcd(a: int, b: int) -> int:
    # gcd(0, 0) == 0; callers needing a positive value check themselves
    return math.gcd(a, b)


def sgn(q: RationalLike) -> int:
    q = as_rational(q)
    return (q > 0) - (q < 0)


def delta_int(q: RationalLike) -> int:
    return 1 if as_rational(q).denominator == 1 else 0


def neg_one_pow(q: RationalLike) -> int:
    """``(-1)**q`` for integral ``q``; anything else is a caller bug."""
    q = as_rational(q)
    if q.denominator != 1:
        raise DomainError(f"(-1)**q needs an integer exponent, got {q}")
    return -1 if q.numerator % 2 else 1


def partial_fraction_split(
    m: int, n: int, x: RationalLike, y: RationalLike
) -> tuple[list[Fraction], list[Fraction]]:
    """Coefficients of the decomposition of ``1/((d-x)^m (d-y)^n)``.

    Returns ``(c, e)`` where ``c[j-1]`` multiplies ``1/(d-x)^j`` for
    ``j = 1..m`` and ``e[j-1]`` multiplies ``1/(d-y)^j`` for ``j = 1..n``.
    """
    if m < 1 or n < 1:
        raise DomainError("orders m and n must be positive")
    x, y = as_rational(x), as_rational(y)
    if x == y:
        raise DomainError("poles must be distinct (x != y)")
    diff = x - y
    c = [
        comb(m + n - j - 1, n - 1) * (-1) ** (m - j) / diff ** (m + n - j)
        for j in range(1, m + 1)
    ]
    e = [
        comb(m + n - j - 1, m - 1) * (-1) ** (n - j) / (-diff) ** (m + n - j)
        for j in range(1, n + 1)
    ]
    return c, e


def evaluate_partial_fractions(
    c: list[Fraction], e: list[Fraction], x: RationalLike, y: RationalLike, d: RationalLike
) -> Fraction:
    x, y, d = as_rational(x), as_rational(y), as_rational(d)
    if d == x or d == y:
        raise DomainError("evaluation point coincides with a pole")
    total = Fraction(0)
    for j, coeff in enumerate(c, start=1):
        total += coeff / (d - x) ** j
    for j, coeff in enumerate(e, start=1):
        total += coeff / (d - y) ** j
    return total
