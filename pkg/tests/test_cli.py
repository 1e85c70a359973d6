"""Command-line interface: outputs, formats, exit codes, determinism."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from pextremal.cli import main


def run_cli(args, capsys):
    try:
        code = main(args)
    except SystemExit as exc:   # argparse signals usage errors this way
        code = exc.code
    out = capsys.readouterr().out
    return code, out


def test_eval_point_value(capsys):
    code, out = run_cli(["eval", "--q", "inf", "--point", "1", "1"], capsys)
    assert code == 0
    assert float(out) == pytest.approx(math.log(2.0), abs=1e-15)


def test_eval_point_json(capsys):
    code, out = run_cli(["eval", "--q", "2", "--point", "2", "0.5",
                         "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["point"] == [2.0, 0.5]
    assert 0.0 < payload["value"] < 2.0


def test_eval_grid_csv(capsys):
    code, out = run_cli(["eval", "--q", "1", "--psi-grid", "0:1.5:4"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "psi,rho,value"
    rows = [tuple(map(float, ln.split(","))) for ln in lines[1:]]
    assert len(rows) == 4 * 100
    # the simplex closed form is log^+ |z| = rho outside the ball
    for psi, rho, value in rows[:16]:
        assert value == pytest.approx(max(rho, 0.0), abs=1e-12)


def test_eval_requires_exactly_one_body(capsys, tmp_path):
    code, _ = run_cli(["eval", "--point", "1", "1"], capsys)
    assert code == 2
    tri = tmp_path / "tri.json"
    tri.write_text('{"vertices": [[0,0],[1,0],[0,1]]}')
    code, _ = run_cli(["eval", "--q", "1", "--polytope", str(tri),
                       "--point", "1", "1"], capsys)
    assert code == 2


def test_eval_polytope_file(capsys, tmp_path):
    tri = tmp_path / "tri.json"
    tri.write_text('{"vertices": [[0,0],[1,0],[0,1]]}')
    code, out = run_cli(["eval", "--polytope", str(tri),
                         "--point", repr(math.e), "0"], capsys)
    assert code == 0
    assert float(out) == pytest.approx(1.0, abs=1e-12)
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [[0,0],[1,0]], "label": "x"}')
    code, _ = run_cli(["eval", "--polytope", str(bad),
                       "--point", "1", "1"], capsys)
    assert code == 2


def test_eval_profile_file(capsys, tmp_path):
    prof = tmp_path / "profile.csv"
    rows = ["psi,r1,r2"]
    for p in np.linspace(0.0, math.pi / 2.0, 513):
        rows.append("%.17g,%.17g,%.17g" % (p, math.cos(p), math.sin(p)))
    prof.write_text("\n".join(rows) + "\n")
    code, out = run_cli(["eval", "--q", "2", "--profile", str(prof),
                         "--n", "16", "--point", "2", "0.5"], capsys)
    assert code == 0
    code, ball_out = run_cli(["eval", "--q", "2", "--ball", "1", "--n", "16",
                              "--point", "2", "0.5"], capsys)
    assert code == 0
    assert float(out) == pytest.approx(float(ball_out), abs=1e-4)


def test_mass_json_schema(capsys):
    code, out = run_cli(["mass", "--q", "inf", "--sectors", "4", "--n", "16"],
                        capsys)
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"q", "sectors", "total", "expected_total"}
    assert payload["q"] == "inf"
    assert len(payload["sectors"]) == 4
    assert payload["sectors"][0][0] == 0.0
    assert payload["sectors"][-1][1] == pytest.approx(math.pi / 2.0)
    assert payload["expected_total"] == pytest.approx(8.0 * math.pi ** 2)
    assert payload["total"] == pytest.approx(sum(s[2] for s in payload["sectors"]))


def test_mass_tolerance_gate(capsys):
    code, _ = run_cli(["mass", "--q", "1", "--tol", "0.01"], capsys)
    assert code == 0
    code, _ = run_cli(["mass", "--q", "2", "--n", "8", "--tol", "1e-12"], capsys)
    assert code == 1


def test_mass_rejects_bad_q(capsys):
    code, _ = run_cli(["mass", "--q", "0.5"], capsys)
    assert code == 2


def test_density_csv(capsys):
    code, out = run_cli(["density", "--q", "inf",
                         "--psi-grid", "0.3,0.7853981633974483"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "psi,f_q"
    rows = [tuple(map(float, ln.split(","))) for ln in lines[1:]]
    assert rows[0][0] == 0.3
    assert 1.0 <= rows[0][1] <= 4.0
    assert rows[1][1] == pytest.approx(4.0, rel=0.1)


def test_converge_csv_and_tolerance(capsys):
    code, out = run_cli(["converge", "--q", "1"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,sup_error"
    rows = [tuple(map(float, ln.split(","))) for ln in lines[1:]]
    assert [int(n) for n, _ in rows] == [4, 8, 16, 32, 64]
    errs = [e for _, e in rows]
    assert all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))
    assert errs[-1] <= 0.05
    code, _ = run_cli(["converge", "--q", "1", "--tol", "1e-9"], capsys)
    assert code == 1
    code, _ = run_cli(["converge", "--q", "2"], capsys)
    assert code == 2


def test_byte_identical_output(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    for path in (first, second):
        assert main(["density", "--q", "inf", "--psi-grid", "0.3,0.9",
                     "--out", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "pextremal.cli", "eval", "--q", "inf",
         "--point", "1", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert float(proc.stdout) == pytest.approx(math.log(2.0), abs=1e-15)


def test_unknown_flag_is_usage_error(capsys):
    code, _ = run_cli(["mass", "--q", "2", "--bogus"], capsys)
    assert code == 2
