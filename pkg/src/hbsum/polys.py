"""Exact Bernoulli numbers and Bernoulli/Euler polynomials.

Both polynomial families are stored as ascending coefficient rows in a
shared, monotonically growing :class:`PolyTable`. Bernoulli numbers use
``B_1 = -1/2`` so that ``B_n(0) = B_n``.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from math import comb

from .exact import DomainError, RationalLike, as_rational

DEFAULT_MAX_ORDER = 64


def _env_max_order() -> int:
    raw = os.environ.get("HBSUM_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"HBSUM_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError("HBSUM_MAX_ORDER must be non-negative")
    return value


class PolyTable:
    """Memoized Bernoulli numbers and coefficient rows up to ``size - 1``.

    Growth happens under a single writer lock. Each list is only ever
    appended to, so a row that has been published is never mutated and
    reads after :meth:`ensure` need no locking.
    """

    def __init__(self, max_order: int | None = None):
        self.max_order = _env_max_order() if max_order is None else max_order
        self.bernoulli_numbers: list[Fraction] = [Fraction(1)]
        self.euler_at_zero: list[Fraction] = [Fraction(1)]
        self.bernoulli_coeff_rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self.euler_coeff_rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.euler_coeff_rows)

    def ensure(self, order: int) -> None:
        """Grow every table so that index ``order`` is available."""
        if order < 0:
            raise DomainError("order must be non-negative")
        if order < len(self.euler_coeff_rows) and order + 1 < len(self.bernoulli_numbers):
            return
        if order > self.max_order:
            raise DomainError(
                f"order {order} exceeds the polynomial order cap {self.max_order} "
                "(set HBSUM_MAX_ORDER to raise it)"
            )
        with self._lock:
            # Euler row n is cross-checked against B_{n+1}, so Bernoulli runs one ahead
            while len(self.bernoulli_numbers) <= order + 1:
                self._grow_bernoulli()
            while len(self.euler_coeff_rows) <= order:
                self._grow_euler()

    def _grow_bernoulli(self) -> None:
        bn = self.bernoulli_numbers
        n = len(bn)
        # sum_{k=0}^{n} C(n+1, k) B_k = 0
        value = -sum(comb(n + 1, k) * bn[k] for k in range(n)) / (n + 1)
        bn.append(value)
        self.bernoulli_coeff_rows.append(
            tuple(comb(n, i) * bn[n - i] for i in range(n + 1))
        )

    def _grow_euler(self) -> None:
        ez = self.euler_at_zero
        n = len(self.euler_coeff_rows)
        # E_n(1) + E_n(0) = 0 for n >= 1, with E_n(1) = sum_k C(n,k) E_k(0)
        if n >= len(ez):
            ez.append(-sum(comb(n, k) * ez[k] for k in range(n)) / 2)
        row = tuple(comb(n, i) * ez[n - i] for i in range(n + 1))
        closed = _euler_row_from_bernoulli(n, self.bernoulli_numbers)
        if row != closed:
            raise RuntimeError(f"Euler polynomial row {n} disagrees with the Bernoulli closed form")
        self.euler_coeff_rows.append(row)

    def warm(self, order: int) -> "PolyTable":
        self.ensure(order)
        return self


def _euler_row_from_bernoulli(n: int, bn: list[Fraction]) -> tuple[Fraction, ...]:
    # E_n(x) = 2/(n+1) * (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)), coefficient of x^i
    return tuple(
        Fraction(2, n + 1) * comb(n + 1, i) * bn[n + 1 - i] * (1 - 2 ** (n + 1 - i))
        for i in range(n + 1)
    )


def _horner(row: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(row):
        acc = acc * x + coeff
    return acc


TABLE = PolyTable()


def warm(order: int) -> None:
    TABLE.ensure(order)


def bernoulli_number(j: int) -> Fraction:
    # the table keeps Bernoulli data one order ahead of the Euler rows
    TABLE.ensure(max(j - 1, 0))
    return TABLE.bernoulli_numbers[j]


def bernoulli_poly(n: int, x: RationalLike) -> Fraction:
    """Exact ``B_n(x) = sum_k C(n,k) B_k x^(n-k)``."""
    TABLE.ensure(max(n - 1, 0))
    return _horner(TABLE.bernoulli_coeff_rows[n], as_rational(x))


def euler_poly(n: int, x: RationalLike) -> Fraction:
    """Exact ``E_n(x)`` from the Appell expansion in the values ``E_k(0)``."""
    TABLE.ensure(n)
    return _horner(TABLE.euler_coeff_rows[n], as_rational(x))


def euler_poly_closed(n: int, x: RationalLike) -> Fraction:
    """Independent route: ``E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))``."""
    x = as_rational(x)
    return Fraction(2, n + 1) * (
        bernoulli_poly(n + 1, x) - 2 ** (n + 1) * bernoulli_poly(n + 1, x / 2)
    )


def euler_at_zero_from_bernoulli(j: int) -> Fraction:
    """``E_{j-1}(0) = -2 (2^j - 1) B_j / j`` for ``j >= 1``."""
    if j < 1:
        raise DomainError("j must be positive")
    return -2 * (2**j - 1) * bernoulli_number(j) / j
