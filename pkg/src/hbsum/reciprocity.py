"""Both sides of each reciprocity identity, evaluated exactly.

Every ``verify_*`` function returns a :class:`VerificationReport` whose
residual is ``lhs - rhs``; an instance is verified only when the residual is
exactly zero. Violated hypotheses raise :class:`PreconditionError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Mapping

from .exact import (
    DomainError,
    RationalLike,
    as_rational,
    delta_int,
    gcd,
    neg_one_pow,
    sgn,
)
from .periodic import euler_bar
from .sums import SumSpec, dedekind_sum, generalized_s5, hardy_s5, hardy_s5_three


class PreconditionError(DomainError):
    """The hypotheses of an identity are not met by the given parameters."""


class Identity(str, enum.Enum):
    DEDEKIND = "dedekind_12"
    HARDY = "hardy_13"
    THM11 = "thm_11"
    COR12 = "cor_12"
    THM13 = "thm_13"
    COR14 = "cor_14"


# short names used on the command line
IDENTITY_ALIASES = {
    "dedekind": Identity.DEDEKIND,
    "hardy": Identity.HARDY,
    "thm11": Identity.THM11,
    "cor12": Identity.COR12,
    "thm13": Identity.THM13,
    "cor14": Identity.COR14,
}

IDENTITY_PARAMS: dict[Identity, tuple[str, ...]] = {
    Identity.DEDEKIND: ("a", "b"),
    Identity.HARDY: ("a", "b"),
    Identity.COR12: ("a", "b"),
    Identity.THM11: ("m", "n", "a", "b", "x", "y", "z"),
    Identity.THM13: ("m", "n", "a", "b", "c", "x", "y", "z"),
    Identity.COR14: ("a", "b", "c"),
}

RATIONAL_PARAMS = frozenset({"x", "y", "z"})


@dataclass(frozen=True)
class VerificationReport:
    identity: Identity
    parameters: Mapping[str, Any]
    lhs: Fraction
    rhs: Fraction
    residual: Fraction = field(init=False)
    verified: bool = field(init=False)

    def __post_init__(self):
        residual = self.lhs - self.rhs
        object.__setattr__(self, "residual", residual)
        object.__setattr__(self, "verified", residual == 0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity.value,
            "params": {k: str(v) for k, v in self.parameters.items()},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "residual": str(self.residual),
            "verified": self.verified,
        }

    def describe(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "verified" if self.verified else "FAILED"
        return (
            f"{self.identity.value} {params}: {status}\n"
            f"  lhs      = {self.lhs}\n"
            f"  rhs      = {self.rhs}\n"
            f"  residual = {self.residual}"
        )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _odd(v: int) -> bool:
    return v % 2 == 1


def verify_dedekind(a: int, b: int) -> VerificationReport:
    _require(a > 0 and b > 0, "a and b must be positive")
    _require(gcd(a, b) == 1, "a and b must be coprime")
    lhs = dedekind_sum(a, b) + dedekind_sum(b, a)
    rhs = Fraction(-1, 4) + (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12
    return VerificationReport(Identity.DEDEKIND, {"a": a, "b": b}, lhs, rhs)


def verify_hardy(a: int, b: int) -> VerificationReport:
    _require(a > 0 and b > 0, "a and b must be positive")
    _require(_odd(a) and _odd(b), "a and b must be odd")
    _require(gcd(a, b) == 1, "a and b must be coprime")
    lhs = hardy_s5(a, b) + hardy_s5(b, a)
    rhs = Fraction(1, 2) - Fraction(1, 2 * a * b)
    return VerificationReport(Identity.HARDY, {"a": a, "b": b}, lhs, rhs)


def verify_cor12(a: int, b: int) -> VerificationReport:
    _require(a > 0 and b > 0, "a and b must be positive")
    _require(_odd(a) and _odd(b), "a and b must be odd")
    lhs = hardy_s5(a, b) + hardy_s5(b, a)
    rhs = Fraction(1, 2) - Fraction(gcd(a, b) ** 2, 2 * a * b)
    return VerificationReport(Identity.COR12, {"a": a, "b": b}, lhs, rhs)


def _check_orders(m: int, n: int) -> None:
    _require(m >= 0 and n >= 0, "orders m and n must be non-negative")


def _gcd_term(m: int, n: int, a: int, b: int, y: Fraction, z: Fraction) -> Fraction:
    # m! n! (a,b)^(m+n+2) Ebar_{m+n+1}((az - by)/(a,b)) / (a^(n+1) b^(m+1) (m+n+1)!)
    g = gcd(a, b)
    weight = Fraction(factorial(m) * factorial(n), factorial(m + n + 1))
    scale = Fraction(g ** (m + n + 2)) / (Fraction(a) ** (n + 1) * Fraction(b) ** (m + 1))
    return weight * scale * euler_bar(m + n + 1, (a * z - b * y) / g)


def thm11_lhs(
    m: int, n: int, a: int, b: int, x: RationalLike, y: RationalLike, z: RationalLike
) -> Fraction:
    _check_orders(m, n)
    _require(_odd(a) and _odd(b), "a and b must be odd")
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    top = m + n + 1
    first = sum(
        (
            comb(m, j) * (-1) ** j * Fraction(a) ** (m - j) / (top - j)
            * generalized_s5(SumSpec(j, top - j, a, 1, b, y, x, z))
            for j in range(m + 1)
        ),
        Fraction(0),
    )
    second = sum(
        (
            comb(n, j) * (-1) ** j * Fraction(b) ** (n - j) / (top - j)
            * generalized_s5(SumSpec(j, top - j, b, 1, a, z, x, y))
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    return 2 * Fraction(b) ** n * sgn(b) * first + 2 * Fraction(a) ** m * sgn(a) * second


def thm11_rhs(
    m: int, n: int, a: int, b: int, x: RationalLike, y: RationalLike, z: RationalLike
) -> Fraction:
    _check_orders(m, n)
    _require(_odd(a) and _odd(b), "a and b must be odd")
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    u, v = a * x - y, b * x - z
    value = (-1) ** (m + n) * euler_bar(m, u) * euler_bar(n, v)
    # (-1)^(ax+bx-y-z) only has meaning once both delta guards fire
    if m == 0 and n == 0 and delta_int(u) and delta_int(v):
        value += sgn(a * b) * neg_one_pow(u + v)
    value += (-1) ** m * 2 * _gcd_term(m, n, a, b, y, z)
    return value


def verify_thm11(
    m: int, n: int, a: int, b: int, x: RationalLike, y: RationalLike, z: RationalLike
) -> VerificationReport:
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    lhs = thm11_lhs(m, n, a, b, x, y, z)
    rhs = thm11_rhs(m, n, a, b, x, y, z)
    params = {"m": m, "n": n, "a": a, "b": b, "x": x, "y": y, "z": z}
    return VerificationReport(Identity.THM11, params, lhs, rhs)


def thm13_lhs(
    m: int, n: int, a: int, b: int, c: int,
    x: RationalLike, y: RationalLike, z: RationalLike,
) -> Fraction:
    _check_orders(m, n)
    _require(_odd(a) and _odd(b), "a and b must be odd")
    _require(c != 0, "c must be nonzero")
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    top = m + n + 1
    cf = Fraction(c)
    first = sum(
        (
            comb(m, j) * (-1) ** j * Fraction(a) ** (m - j) / (cf ** (m + n - j) * (top - j))
            * generalized_s5(SumSpec(j, top - j, a, c, b, y, x, z))
            for j in range(m + 1)
        ),
        Fraction(0),
    )
    second = sum(
        (
            comb(n, j) * (-1) ** j * Fraction(b) ** (n - j) / (cf ** (m + n - j) * (top - j))
            * generalized_s5(SumSpec(j, top - j, b, c, a, z, x, y))
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    return 2 * Fraction(b) ** n * sgn(b * c) * first + 2 * Fraction(a) ** m * sgn(a * c) * second


def thm13_rhs(
    m: int, n: int, a: int, b: int, c: int,
    x: RationalLike, y: RationalLike, z: RationalLike,
) -> Fraction:
    _check_orders(m, n)
    _require(_odd(a) and _odd(b), "a and b must be odd")
    _require(c != 0, "c must be nonzero")
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    products = Fraction(0)
    deltas = 0
    for r in range(abs(c)):
        shift = (r - x) / c
        products += euler_bar(m, -a * shift - y) * euler_bar(n, -b * shift - z)
        if m == 0 and n == 0:
            u, v = a * shift + y, b * shift + z
            if delta_int(u) and delta_int(v):
                deltas += neg_one_pow((a + b) * shift + y + z)
    value = (-1) ** (m + n) * products
    value += (-1) ** m * 2 * sgn(c) * c * _gcd_term(m, n, a, b, y, z)
    value += sgn(a * b) * deltas
    return value


def verify_thm13(
    m: int, n: int, a: int, b: int, c: int,
    x: RationalLike, y: RationalLike, z: RationalLike,
) -> VerificationReport:
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    lhs = thm13_lhs(m, n, a, b, c, x, y, z)
    rhs = thm13_rhs(m, n, a, b, c, x, y, z)
    params = {"m": m, "n": n, "a": a, "b": b, "c": c, "x": x, "y": y, "z": z}
    return VerificationReport(Identity.THM13, params, lhs, rhs)


def verify_cor14(a: int, b: int, c: int) -> VerificationReport:
    _require(a > 0 and b > 0, "a and b must be positive")
    _require(_odd(a) and _odd(b), "a and b must be odd")
    _require(c >= 1, "c must be a positive integer")
    _require(gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1, "a, b, c must be pairwise coprime")
    lhs = hardy_s5_three(a, c, b) + hardy_s5_three(b, c, a)
    # empty for c = 1
    signs = sum(-1 if ((a * r) // c + (b * r) // c) % 2 else 1 for r in range(1, c))
    rhs = Fraction(signs, 2) - Fraction(c, 2 * a * b) + Fraction(1, 2)
    return VerificationReport(Identity.COR14, {"a": a, "b": b, "c": c}, lhs, rhs)


_VERIFIERS = {
    Identity.DEDEKIND: verify_dedekind,
    Identity.HARDY: verify_hardy,
    Identity.COR12: verify_cor12,
    Identity.THM11: verify_thm11,
    Identity.THM13: verify_thm13,
    Identity.COR14: verify_cor14,
}


def resolve_identity(name: str | Identity) -> Identity:
    if isinstance(name, Identity):
        return name
    if name in IDENTITY_ALIASES:
        return IDENTITY_ALIASES[name]
    try:
        return Identity(name)
    except ValueError:
        raise DomainError(f"unknown identity {name!r}") from None


def verify(identity: str | Identity, params: Mapping[str, Any]) -> VerificationReport:
    """Dispatch on ``identity`` with exactly the parameters it takes."""
    identity = resolve_identity(identity)
    names = IDENTITY_PARAMS[identity]
    missing = [k for k in names if params.get(k) is None]
    if missing:
        raise PreconditionError(f"{identity.value} needs parameters: {', '.join(missing)}")
    args = [as_rational(params[k]) if k in RATIONAL_PARAMS else int(params[k]) for k in names]
    return _VERIFIERS[identity](*args)


def precondition_failure(identity: str | Identity, params: Mapping[str, Any]) -> str | None:
    """Return the violated hypothesis for ``params``, or ``None`` if they are admissible.

    Only the cheap parameter checks run; no sums are evaluated.
    """
    identity = resolve_identity(identity)
    p = params
    try:
        if identity is Identity.DEDEKIND:
            _require(p["a"] > 0 and p["b"] > 0, "a and b must be positive")
            _require(gcd(p["a"], p["b"]) == 1, "a and b must be coprime")
        elif identity in (Identity.HARDY, Identity.COR12):
            _require(p["a"] > 0 and p["b"] > 0, "a and b must be positive")
            _require(_odd(p["a"]) and _odd(p["b"]), "a and b must be odd")
            if identity is Identity.HARDY:
                _require(gcd(p["a"], p["b"]) == 1, "a and b must be coprime")
        elif identity in (Identity.THM11, Identity.THM13):
            _require(p["m"] >= 0 and p["n"] >= 0, "orders m and n must be non-negative")
            _require(_odd(p["a"]) and _odd(p["b"]), "a and b must be odd")
            if identity is Identity.THM13:
                _require(p["c"] != 0, "c must be nonzero")
        elif identity is Identity.COR14:
            a, b, c = p["a"], p["b"], p["c"]
            _require(a > 0 and b > 0 and _odd(a) and _odd(b), "a and b must be odd and positive")
            _require(c >= 1, "c must be a positive integer")
            _require(gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1,
                     "a, b, c must be pairwise coprime")
    except PreconditionError as exc:
        return str(exc)
    return None
