"""Command-line front end: ``hbsum compute | verify | sweep | check | polys``.

Exit codes are shared by every subcommand: 0 when everything verified or
passed, 1 on a mathematical failure (nonzero residual, deviation above
tolerance, non-convergence), 2 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from . import analytic, polys
from .exact import DomainError, parse_rational
from .reciprocity import IDENTITY_ALIASES, verify
from .suites import run_identity_suites
from .sums import dedekind_sum, gen_s5, hardy_s5, hardy_s5_three
from .sweep import (
    SweepGrid,
    parse_int_range,
    parse_rational_list,
    run_sweep,
    write_csv,
    write_json,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_PARAMS = {
    "dedekind": ("a", "b"),
    "s5": ("a", "b"),
    "s5-three": ("a", "b", "c"),
    "gen": ("m", "n", "a", "b", "c", "x", "y", "z"),
}


class UsageError(Exception):
    pass


def _add_global(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands accept the global flags too; SUPPRESS keeps them from clobbering
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="machine-readable output")
    parser.add_argument("--jobs", type=int, default=default, help="worker processes for sweeps")
    parser.add_argument("--out", type=Path, default=default, help="output path")


def _add_matrix(parser: argparse.ArgumentParser, rational_lists: bool = False) -> None:
    for name in ("m", "n", "a", "b", "c"):
        parser.add_argument(f"--{name}", type=str if rational_lists else int)
    for name in ("x", "y", "z"):
        parser.add_argument(f"--{name}", type=str)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbsum",
        allow_abbrev=False,
        description="Exact Dedekind and Hardy-Berndt sums and their reciprocity formulas.",
    )
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", allow_abbrev=False, help="evaluate one sum exactly")
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    _add_matrix(p)
    _add_global(p, suppress=True)

    p = sub.add_parser("verify", allow_abbrev=False, help="check one identity instance exactly")
    p.add_argument("identity", choices=sorted(IDENTITY_ALIASES))
    _add_matrix(p)
    _add_global(p, suppress=True)

    p = sub.add_parser("sweep", allow_abbrev=False, help="verify an identity over a parameter grid")
    p.add_argument("identity", choices=sorted(IDENTITY_ALIASES))
    _add_matrix(p, rational_lists=True)
    p.add_argument("--triples", type=int, help="sample this many (x,y,z) combinations per integer cell")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--inject-fault", type=int, action="append", default=[], help=argparse.SUPPRESS)
    _add_global(p, suppress=True)

    p = sub.add_parser("check", allow_abbrev=False, help="numerical checks and exact identity suites")
    p.add_argument("which", choices=("ebar-fourier", "bbar-fourier", "lemma24", "lemma25", "lemma27", "identities"))
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--x", type=str)
    p.add_argument("--point", type=str, help="evaluation point for lemma24, as p/q")
    p.add_argument("--terms", type=int, help="fixed truncation (disables adaptive growth)")
    p.add_argument("--initial-terms", type=int)
    p.add_argument("--max-terms", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _add_global(p, suppress=True)

    p = sub.add_parser("polys", allow_abbrev=False, help="dump Bernoulli numbers or Euler values E_n(0) as CSV")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--table", choices=("bernoulli", "euler"), default="bernoulli")
    _add_global(p, suppress=True)
    return parser


def _need(args: argparse.Namespace, names: Sequence[str], what: str) -> dict[str, Any]:
    missing = [k for k in names if getattr(args, k, None) is None]
    if missing:
        raise UsageError(f"{what} needs --{', --'.join(missing)}")
    out: dict[str, Any] = {}
    for k in names:
        value = getattr(args, k)
        out[k] = parse_rational(value) if k in ("x", "y", "z", "point") else value
    return out


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out is not None and args.command != "sweep":
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def cmd_compute(args: argparse.Namespace) -> int:
    p = _need(args, FAMILY_PARAMS[args.family], f"compute {args.family}")
    if args.family == "dedekind":
        value = dedekind_sum(p["a"], p["b"])
    elif args.family == "s5":
        value = hardy_s5(p["a"], p["b"])
    elif args.family == "s5-three":
        value = hardy_s5_three(p["a"], p["b"], p["c"])
    else:
        value = gen_s5(**p)
    if args.json:
        _emit(args, json.dumps({"family": args.family, "params": {k: str(v) for k, v in p.items()},
                                "value": str(value)}))
    else:
        _emit(args, str(value))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .reciprocity import IDENTITY_PARAMS, resolve_identity

    identity = resolve_identity(args.identity)
    p = _need(args, IDENTITY_PARAMS[identity], f"verify {args.identity}")
    report = verify(identity, p)
    _emit(args, json.dumps(report.to_dict()) if args.json else report.describe())
    return EXIT_OK if report.verified else EXIT_FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    values: dict[str, list[Any]] = {}
    for name in ("m", "n", "a", "b", "c"):
        if getattr(args, name) is not None:
            values[name] = parse_int_range(getattr(args, name))
    for name in ("x", "y", "z"):
        if getattr(args, name) is not None:
            values[name] = parse_rational_list(getattr(args, name))
    grid = SweepGrid(args.identity, values, triples=args.triples, seed=args.seed,
                     output=args.out, fmt=args.format)
    outcome = run_sweep(grid, jobs=args.jobs, inject_fault=args.inject_fault)
    if args.out is not None:
        try:
            if grid.fmt == "csv":
                write_csv(outcome.reports, args.out)
            else:
                write_json(outcome, args.out)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    elif grid.fmt == "json":
        print(json.dumps({"summary": outcome.summary(),
                          "reports": [r.to_dict() for r in outcome.reports]}))
    s = outcome.summary()
    summary = f"{grid.identity.value}: {s['verified']} verified, {s['failed']} failed, {s['skipped']} skipped"
    stream = sys.stderr if (grid.fmt == "json" and args.out is None) else sys.stdout
    for idx in outcome.failed_indices:
        print(outcome.reports[idx].describe(), file=stream)
    print(summary, file=stream)
    return EXIT_OK if outcome.failed == 0 else EXIT_FAIL


def _plan(args: argparse.Namespace, default: analytic.TruncationPlan) -> analytic.TruncationPlan:
    tol = args.tolerance if args.tolerance is not None else default.tolerance
    if args.terms is not None:
        return analytic.TruncationPlan.fixed(args.terms, tol)
    max_terms = args.max_terms if args.max_terms is not None else default.max_terms
    initial = args.initial_terms if args.initial_terms is not None else default.initial_terms
    return analytic.TruncationPlan(min(initial, max_terms), default.growth_factor, max_terms, tol)


def cmd_check(args: argparse.Namespace) -> int:
    which = args.which
    if which == "identities":
        results = run_identity_suites(seed=args.seed, samples=args.samples)
        ok = all(r.passed for r in results)
        if args.json:
            _emit(args, json.dumps([{"suite": r.name, "instances": r.instances,
                                     "failures": len(r.failures)} for r in results]))
        else:
            lines = [f"{r.name}: {r.instances} instances, {len(r.failures)} failures" for r in results]
            _emit(args, "\n".join(lines))
        return EXIT_OK if ok else EXIT_FAIL

    if which in ("ebar-fourier", "bbar-fourier"):
        p = _need(args, ("n", "x"), which)
        result = analytic.fourier_check(which.split("-")[0], p["n"], p["x"],
                                        _plan(args, analytic.TruncationPlan(tolerance=1e-3)))
    elif which == "lemma24":
        p = _need(args, ("j",), which)
        tol = args.tolerance if args.tolerance is not None else 1e-9
        if args.point is not None:
            result = analytic.lemma24_check(p["j"], parse_rational(args.point), tolerance=tol)
        else:
            q = _need(args, ("r", "b"), which)
            result = analytic.lemma24_check(p["j"], r=q["r"], b=q["b"], tolerance=tol)
        if result.status == "unsupported-point":
            raise UsageError(f"point {args.point} is not of the form r/b - 1/(2b)")
    elif which == "lemma25":
        p = _need(args, ("j", "b", "r"), which)
        result = analytic.lemma25_check(p["j"], p["b"], p["r"],
                                        _plan(args, analytic.TruncationPlan.default_for(p["j"])))
    else:
        p = _need(args, ("j", "b", "r", "x"), which)
        result = analytic.lemma27_check(p["j"], p["b"], p["r"], p["x"],
                                        _plan(args, analytic.TruncationPlan.default_for(p["j"])))

    if args.json:
        _emit(args, json.dumps(result.to_dict()))
    else:
        status = "passed" if result.passed else f"FAILED ({result.status})"
        _emit(args, (
            f"{result.check} {' '.join(f'{k}={v}' for k, v in result.params.items())}: {status}\n"
            f"  lhs       = {result.lhs}\n"
            f"  rhs       = {result.rhs}\n"
            f"  deviation = {result.deviation:.3e}  bound = {result.bound:.3e}  "
            f"tolerance = {result.tolerance:.1e}  terms = {result.terms}"
        ))
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_polys(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    if args.table == "bernoulli":
        rows = [(j, polys.bernoulli_number(j)) for j in range(args.order + 1)]
    else:
        rows = [(n, polys.euler_poly(n, 0)) for n in range(args.order + 1)]
    _emit(args, "\n".join(["order,value"] + [f"{k},{v}" for k, v in rows]))
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "check": cmd_check,
    "polys": cmd_polys,
}


_NEGATIVE_VALUE = re.compile(r"-\d")


def _glue_negatives(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--x -2/5`` as ``--x=-2/5`` so argparse does not read a flag."""
    out: list[str] = []
    for token in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and _NEGATIVE_VALUE.match(token)):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negatives(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"hbsum {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
