"""Parameter sweeps over identity instances with deterministic output order."""

from __future__ import annotations

import csv
import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

from .exact import DomainError, as_rational, parse_rational
from .polys import warm
from .reciprocity import (
    IDENTITY_PARAMS,
    RATIONAL_PARAMS,
    Identity,
    VerificationReport,
    precondition_failure,
    resolve_identity,
    verify,
)

CSV_COLUMNS = ("identity", "m", "n", "a", "b", "c", "x", "y", "z", "lhs", "rhs", "residual", "verified")
PARAM_ORDER = ("m", "n", "a", "b", "c", "x", "y", "z")


def parse_int_range(text: str) -> list[int]:
    """``"start:stop[:step]"`` (stop inclusive), ``"1,3,5"`` or a single integer."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step == 0:
                raise ValueError
            values = list(range(start, stop + (1 if step > 0 else -1), step))
        else:
            values = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise DomainError(f"bad integer range {text!r}; use start:stop[:step] or a comma list") from None
    if not values:
        raise DomainError(f"integer range {text!r} is empty")
    return values


def parse_rational_list(text: str) -> list[Fraction]:
    values = [parse_rational(p) for p in text.split(",") if p.strip()]
    if not values:
        raise DomainError(f"rational list {text!r} is empty")
    return values


@dataclass
class SweepGrid:
    identity: Identity
    values: dict[str, list[Any]]
    triples: int | None = None
    seed: int = 0
    output: Path | None = None
    fmt: str = "csv"

    def __post_init__(self):
        self.identity = resolve_identity(self.identity)
        if self.fmt not in ("csv", "json"):
            raise DomainError("format must be csv or json")
        names = IDENTITY_PARAMS[self.identity]
        missing = [k for k in names if not self.values.get(k)]
        if missing:
            raise DomainError(f"{self.identity.value} sweep needs values for: {', '.join(missing)}")

    @property
    def names(self) -> tuple[str, ...]:
        return IDENTITY_PARAMS[self.identity]

    def instances(self) -> tuple[list[dict[str, Any]], int]:
        """Admissible instances in lexicographic parameter order, plus the skipped count."""
        int_names = [k for k in self.names if k not in RATIONAL_PARAMS]
        rat_names = [k for k in self.names if k in RATIONAL_PARAMS]
        int_axes = [sorted(set(self.values[k])) for k in int_names]
        rat_combos = sorted(itertools.product(*(sorted(set(map(as_rational, self.values[k]))) for k in rat_names)))
        chosen: list[dict[str, Any]] = []
        skipped = 0
        for cell in itertools.product(*int_axes):
            combos = rat_combos
            if self.triples is not None and rat_names and self.triples < len(rat_combos):
                rng = random.Random(f"{self.seed}:{cell}")
                combos = sorted(rng.sample(rat_combos, self.triples))
            for rats in combos:
                params = dict(zip(int_names, cell)) | dict(zip(rat_names, rats))
                if precondition_failure(self.identity, params) is not None:
                    skipped += 1
                    continue
                chosen.append({k: params[k] for k in PARAM_ORDER if k in params})
        chosen.sort(key=lambda p: tuple(p[k] for k in PARAM_ORDER if k in p))
        return chosen, skipped

    def max_order(self) -> int:
        if self.identity in (Identity.THM11, Identity.THM13):
            return max(self.values["m"]) + max(self.values["n"]) + 1
        return 1


@dataclass
class SweepOutcome:
    reports: list[VerificationReport]
    skipped: int
    failed_indices: list[int] = field(default_factory=list)

    @property
    def verified(self) -> int:
        return len(self.reports) - len(self.failed_indices)

    @property
    def failed(self) -> int:
        return len(self.failed_indices)

    def summary(self) -> dict[str, int]:
        return {"verified": self.verified, "failed": self.failed, "skipped": self.skipped}


def _evaluate(identity: str, params: dict[str, Any]) -> VerificationReport:
    return verify(identity, params)


def _evaluate_star(item: tuple[str, dict[str, Any]]) -> VerificationReport:
    return _evaluate(*item)


def run_sweep(
    grid: SweepGrid, jobs: int | None = None, inject_fault: Sequence[int] = ()
) -> SweepOutcome:
    """Evaluate every admissible instance of ``grid``.

    ``inject_fault`` lists row indices whose right-hand side is shifted by one
    after evaluation; it exists so the failure path can be exercised in tests.
    """
    instances, skipped = grid.instances()
    if not instances:
        raise DomainError(f"sweep grid is empty after filtering ({skipped} skipped)")
    order = grid.max_order()
    warm(order)
    jobs = jobs or os.cpu_count() or 1
    items = [(grid.identity.value, p) for p in instances]
    if jobs == 1 or len(items) < 2:
        reports = [_evaluate_star(item) for item in items]
    else:
        chunk = max(1, len(items) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs, initializer=warm, initargs=(order,)) as pool:
            # map preserves submission order, so completion order never leaks out
            reports = list(pool.map(_evaluate_star, items, chunksize=chunk))
    for idx in inject_fault:
        if 0 <= idx < len(reports):
            rep = reports[idx]
            reports[idx] = VerificationReport(rep.identity, rep.parameters, rep.lhs, rep.rhs + 1)
    failed = [i for i, rep in enumerate(reports) if not rep.verified]
    return SweepOutcome(reports, skipped, failed)


def report_row(report: VerificationReport) -> dict[str, str]:
    row = {col: "" for col in CSV_COLUMNS}
    row["identity"] = report.identity.value
    for key, value in report.parameters.items():
        row[key] = str(value)
    row["lhs"] = str(report.lhs)
    row["rhs"] = str(report.rhs)
    row["residual"] = str(report.residual)
    row["verified"] = "true" if report.verified else "false"
    return row


def write_csv(reports: Iterable[VerificationReport], path: Path | str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for rep in reports:
            writer.writerow(report_row(rep))


def write_json(outcome: SweepOutcome, path: Path | str) -> None:
    payload = {
        "summary": outcome.summary(),
        "reports": [rep.to_dict() for rep in outcome.reports],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)


def _row_params(identity: Identity, raw: dict[str, str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for key in IDENTITY_PARAMS[identity]:
        text = raw[key]
        params[key] = parse_rational(text) if key in RATIONAL_PARAMS else int(text)
    return params


def read_reports(path: Path | str) -> list[VerificationReport]:
    """Load a CSV or JSON sweep report back into :class:`VerificationReport` objects."""
    path = Path(path)
    rows: list[tuple[Identity, dict[str, str], str, str]] = []
    if path.suffix == ".json":
        with open(path) as fh:
            payload = json.load(fh)
        for item in payload["reports"]:
            rows.append((resolve_identity(item["identity"]), item["params"], item["lhs"], item["rhs"]))
    else:
        with open(path, newline="") as fh:
            for item in csv.DictReader(fh):
                rows.append((resolve_identity(item["identity"]), item, item["lhs"], item["rhs"]))
    return [
        VerificationReport(identity, _row_params(identity, raw), parse_rational(lhs), parse_rational(rhs))
        for identity, raw, lhs, rhs in rows
    ]


def reverify(report: VerificationReport) -> VerificationReport:
    return verify(report.identity, report.parameters)
