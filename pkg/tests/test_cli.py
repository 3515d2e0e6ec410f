import csv
import json
import os
import random
import subprocess
import sys

import pytest

from hbsum.cli import main
from hbsum.sweep import CSV_COLUMNS, SweepGrid, read_reports, reverify, run_sweep


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["compute", "s5", "--a", "3", "--b", "5"], "4/5"),
        (["compute", "dedekind", "--a", "1", "--b", "3"], "1/18"),
        (["compute", "gen", "--m", "0", "--n", "1", "--a", "1", "--b", "1", "--c", "1",
          "--x", "0", "--y", "0", "--z", "0"], "0"),
        (["compute", "s5-three", "--a", "3", "--b", "2", "--c", "5"], "-2/5"),
    ],
)
def test_compute_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_compute_json(capsys):
    code, out, _ = run(capsys, "--json", "compute", "s5", "--a", "3", "--b", "5")
    assert code == 0
    assert json.loads(out)["value"] == "4/5"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "s5", "--a", "3"],
        ["compute", "s5", "--a", "3", "--b", "0"],
        ["compute", "gen", "--m", "0", "--n", "1", "--a", "1", "--b", "1", "--c", "0"],
        ["compute", "gen", "--m", "0", "--n", "1", "--a", "1", "--b", "1", "--c", "1", "--x", "0.5"],
        ["compute", "nonsense"],
        [],
    ],
)
def test_compute_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "hardy", "--a", "3", "--b", "5")
    assert code == 0 and "verified" in out
    code, _, _ = run(capsys, "verify", "thm11", "--m", "0", "--n", "0", "--a", "1", "--b", "1",
                     "--x", "0", "--y", "0", "--z", "0")
    assert code == 0
    assert run(capsys, "verify", "hardy", "--a", "2", "--b", "5")[0] == 2


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "thm13", "--json", "--m", "1", "--n", "2", "--a", "3", "--b", "5",
                       "--c", "-4", "--x", "1/3", "--y", "1/2", "--z", "-2/5")
    assert code == 0
    report = json.loads(out)
    assert report["residual"] == "0" and report["verified"] is True


def test_sweep_acceptance_example(capsys, tmp_path):
    out_file = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "sweep", "thm11", "--m", "0:2", "--n", "0:2", "--a", "1:9:2", "--b", "1:9:2",
                       "--x", "0", "--y", "0", "--z", "0", "--jobs", "1", "--out", str(out_file))
    assert code == 0
    assert "225 verified, 0 failed, 0 skipped" in out
    with out_file.open() as fh:
        reader = csv.reader(fh)
        assert tuple(next(reader)) == CSV_COLUMNS
        assert sum(1 for _ in reader) == 225


def test_sweep_skips_are_counted(capsys):
    code, out, _ = run(capsys, "sweep", "hardy", "--a", "1:6", "--b", "1:6", "--jobs", "1")
    assert code == 0
    # coprime odd pairs among 1..6: (1,1) (1,3) (1,5) (3,1) (3,5) (5,1) (5,3)
    assert "7 verified, 0 failed, 29 skipped" in out


def test_sweep_empty_grid(capsys):
    code, _, err = run(capsys, "sweep", "hardy", "--a", "2:8:2", "--b", "2:8:2")
    assert code == 2
    assert "empty" in err


def test_sweep_empty_range(capsys):
    assert run(capsys, "sweep", "hardy", "--a", "5:1", "--b", "1")[0] == 2


def test_sweep_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing" / "dir" / "out.csv"
    code, _, _ = run(capsys, "sweep", "hardy", "--a", "1:5:2", "--b", "1:5:2", "--jobs", "1", "--out", str(target))
    assert code == 2


def test_sweep_seeded_corrupted_row(capsys, tmp_path):
    rng = random.Random(2024)
    grid_args = ["sweep", "cor12", "--a", "1:11:2", "--b", "1:11:2", "--jobs", "1"]
    row = rng.randrange(36)
    code, out, _ = run(capsys, *grid_args, "--inject-fault", str(row))
    assert code == 1
    assert "35 verified, 1 failed" in out
    assert "residual" in out


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_sweep_round_trip(capsys, tmp_path, fmt):
    target = tmp_path / f"out.{fmt}"
    code, _, _ = run(capsys, "sweep", "thm13", "--m", "0:1", "--n", "0:1", "--a", "1,3", "--b", "5",
                     "--c", "-3,2", "--x", "0,1/2", "--y", "1/3", "--z", "-2/5",
                     "--format", fmt, "--jobs", "1", "--out", str(target))
    assert code == 0
    reports = read_reports(target)
    assert len(reports) == 32
    for rep in reports:
        again = reverify(rep)
        assert again.residual == rep.residual == 0
        assert (again.lhs, again.rhs) == (rep.lhs, rep.rhs)


def test_round_trip_preserves_nonzero_residual(tmp_path):
    grid = SweepGrid("hardy", {"a": [1, 3, 5], "b": [1, 3, 5]})
    outcome = run_sweep(grid, jobs=1, inject_fault=[2])
    from hbsum.sweep import write_csv

    path = tmp_path / "fault.csv"
    write_csv(outcome.reports, path)
    back = read_reports(path)
    assert [r.residual for r in back] == [r.residual for r in outcome.reports]
    assert back[2].residual == -1


def test_sweep_order_independent_of_jobs():
    values = {"m": [0, 1], "n": [0, 1], "a": [-3, 1, 3], "b": [1, 5],
              "x": [0, 1], "y": [0], "z": [0]}
    from fractions import Fraction

    values["x"] = [Fraction(0), Fraction(1, 3)]
    serial = run_sweep(SweepGrid("thm11", values), jobs=1)
    parallel = run_sweep(SweepGrid("thm11", values), jobs=2)
    assert [r.to_dict() for r in serial.reports] == [r.to_dict() for r in parallel.reports]


def test_sweep_triple_sampling_is_seeded():
    values = {"m": [0], "n": [1], "a": [1], "b": [3], "x": ["0", "1/2", "1/3"], "y": ["0", "1/2"], "z": ["0"]}
    first, _ = SweepGrid("thm11", values, triples=3, seed=7).instances()
    second, _ = SweepGrid("thm11", values, triples=3, seed=7).instances()
    assert first == second and len(first) == 3


@pytest.mark.parametrize(
    "argv, code",
    [
        (["check", "lemma25", "--j", "2", "--b", "1", "--r", "0"], 0),
        (["check", "ebar-fourier", "--n", "1", "--x", "1/4", "--terms", "10000"], 0),
        (["check", "bbar-fourier", "--n", "2", "--x", "1/3"], 0),
        (["check", "lemma24", "--j", "4", "--r", "2", "--b", "5"], 0),
        (["check", "lemma24", "--j", "2", "--point", "1/2"], 0),
        (["check", "lemma27", "--j", "1", "--b", "3", "--r", "1", "--x", "1/4"], 0),
        (["check", "identities", "--samples", "20"], 0),
        (["check", "lemma25", "--j", "1", "--b", "2", "--r", "1", "--max-terms", "10"], 1),
        (["check", "lemma24", "--j", "2", "--point", "1/3"], 2),
        (["check", "lemma25", "--j", "0", "--b", "1", "--r", "0"], 2),
        (["check", "lemma25", "--j", "2", "--b", "0", "--r", "0"], 2),
    ],
)
def test_check_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_check_prints_deviation_and_bound(capsys):
    code, out, _ = run(capsys, "check", "lemma25", "--j", "2", "--b", "1", "--r", "0")
    assert code == 0
    assert "deviation" in out and "bound" in out


def test_polys_table(capsys):
    code, out, _ = run(capsys, "polys", "--order", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "order,value"
    assert lines[1:] == ["0,1", "1,-1/2", "2,1/6", "3,0", "4,-1/30"]


def test_max_order_env(tmp_path):
    env = dict(os.environ, HBSUM_MAX_ORDER="5")
    cmd = [sys.executable, "-m", "hbsum", "polys", "--order", "10"]
    assert subprocess.run(cmd, env=env, capture_output=True).returncode == 2
    cmd[-1] = "5"
    assert subprocess.run(cmd, env=env, capture_output=True).returncode == 0
