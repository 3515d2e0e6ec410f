"""Run the reciprocity verification grids and write one CSV per identity.

    python3 scripts/run_grids.py --out results/ --jobs 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from hbsum.sweep import SweepGrid, run_sweep, write_csv

AXIS = ["0", "1/2", "1/3", "-2/5"]
ODD_SIGNED = [s * v for v in (1, 3, 5, 7, 9) for s in (1, -1)]


@dataclass(frozen=True)
class GridConfig:
    identity: str
    values: dict = field(hash=False)
    triples: int | None = None


GRIDS = (
    GridConfig("thm11", {"m": range(4), "n": range(4), "a": ODD_SIGNED, "b": ODD_SIGNED,
                         "x": AXIS, "y": AXIS, "z": AXIS}, triples=16),
    GridConfig("thm13", {"m": range(3), "n": range(3), "a": range(1, 10, 2), "b": range(1, 10, 2),
                         "c": [s * v for v in range(1, 7) for s in (1, -1)],
                         "x": AXIS, "y": AXIS, "z": AXIS}, triples=8),
    GridConfig("hardy", {"a": range(1, 26), "b": range(1, 26)}),
    GridConfig("cor12", {"a": range(1, 26, 2), "b": range(1, 26, 2)}),
    GridConfig("cor14", {"a": (1, 3, 5, 7), "b": (1, 3, 5, 7), "c": range(1, 11)}),
    GridConfig("dedekind", {"a": range(1, 31), "b": range(1, 31)}),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--only", nargs="*", help="subset of identities to run")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    status = 0
    for cfg in GRIDS:
        if args.only and cfg.identity not in args.only:
            continue
        grid = SweepGrid(cfg.identity, {k: list(v) for k, v in cfg.values.items()},
                         triples=cfg.triples, seed=args.seed)
        start = time.perf_counter()
        outcome = run_sweep(grid, jobs=args.jobs)
        write_csv(outcome.reports, args.out / f"{cfg.identity}.csv")
        s = outcome.summary()
        print(f"{cfg.identity:9s} verified={s['verified']:6d} failed={s['failed']} "
              f"skipped={s['skipped']:5d} {time.perf_counter() - start:6.1f}s")
        status |= bool(s["failed"])
    return status


if __name__ == "__main__":
    raise SystemExit(main())
