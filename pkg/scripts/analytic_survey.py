"""Convergence survey for the floating-point checks.

Tabulates, for growing truncation N, the observed deviation and the
estimated tail bound of the bilateral sums and of the Fourier partial sums.
Output is CSV on stdout (or --out).
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from fractions import Fraction

from hbsum.analytic import TruncationPlan, fourier_check, lemma25_check, lemma27_check

TERMS = (10, 100, 1_000, 10_000, 100_000)


def rows():
    for j, b, r in [(1, 2, 1), (2, 1, 0), (3, 3, 1), (4, -5, 2)]:
        for n_terms in TERMS:
            res = lemma25_check(j, b, r, TruncationPlan.fixed(n_terms, 1e-12))
            yield ("lemma25", f"j={j} b={b} r={r}", n_terms, res.deviation, res.bound)
    for j, b, r, x in [(1, 3, 1, Fraction(1, 4)), (2, 1, 0, Fraction(1, 3))]:
        for n_terms in TERMS:
            res = lemma27_check(j, b, r, x, TruncationPlan.fixed(n_terms, 1e-12))
            yield ("lemma27", f"j={j} b={b} r={r} x={x}", n_terms, res.deviation, res.bound)
    for kind in ("ebar", "bbar"):
        for n in range(1 if kind == "bbar" else 0, 5):
            for x in (Fraction(1, 50), Fraction(1, 3)):
                for n_terms in TERMS:
                    res = fourier_check(kind, n, x, TruncationPlan.fixed(n_terms, 1e-12))
                    yield (f"{kind}-fourier", f"n={n} x={x}", n_terms, res.deviation, res.bound)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = parser.parse_args()
    writer = csv.writer(args.out)
    writer.writerow(["check", "case", "terms", "deviation", "bound", "bound_covers"])
    for check, case, n_terms, dev, bound in rows():
        writer.writerow([check, case, n_terms, f"{dev:.3e}", f"{bound:.3e}",
                         dev <= 10 * bound or math.isclose(dev, 0.0, abs_tol=1e-14)])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
