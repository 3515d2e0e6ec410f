"""Exact Dedekind and Hardy-Berndt sums, their reciprocity formulas, and numerical lemma checks."""

from .exact import (
    DomainError,
    Rational,
    delta_int,
    floor_frac,
    gcd,
    make_rational,
    neg_one_pow,
    parse_rational,
    partial_fraction_split,
    sgn,
)
from .periodic import bernoulli_bar, distribution_sum, euler_bar, raabe_sum, sawtooth
from .polys import PolyTable, bernoulli_number, bernoulli_poly, euler_poly
from .reciprocity import (
    Identity,
    PreconditionError,
    VerificationReport,
    verify,
    verify_cor12,
    verify_cor14,
    verify_dedekind,
    verify_hardy,
    verify_thm11,
    verify_thm13,
)
from .sums import SumSpec, dedekind_sum, generalized_s5, hardy_s5, hardy_s5_three

__version__ = "0.1.0"


__all__ = [
    "DomainError",
    "Identity",
    "PolyTable",
    "PreconditionError",
    "Rational",
    "SumSpec",
    "VerificationReport",
    "bernoulli_bar",
    "bernoulli_number",
    "bernoulli_poly",
    "dedekind_sum",
    "delta_int",
    "distribution_sum",
    "euler_bar",
    "euler_poly",
    "floor_frac",
    "gcd",
    "generalized_s5",
    "hardy_s5",
    "hardy_s5_three",
    "make_rational",
    "neg_one_pow",
    "parse_rational",
    "partial_fraction_split",
    "raabe_sum",
    "sawtooth",
    "sgn",
    "verify",
    "verify_cor12",
    "verify_cor14",
    "verify_dedekind",
    "verify_hardy",
    "verify_thm11",
    "verify_thm13",
    "__version__",
]
