import json
import os
import subprocess
import sys

import pytest

from bethe_wronski.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_solve_two_two(capsys):
    code, doc, _ = run(capsys, "solve", "--nu", "2,2", "--z", "1,2,3,4")
    assert code == 0 and doc["passed"]
    assert doc["command"] == "solve" and doc["seed"] == 0 and doc["f_nu"] == 2
    assert len(doc["solutions"]) == 2
    for sol in doc["solutions"]:
        assert float(sol["residuals"]["wronskian"]) <= 1e-8
        assert float(sol["residuals"]["relations"]) <= 1e-8
        assert "eigenvectors" not in sol


def test_solve_with_vectors_and_orthogonal_form(capsys):
    code, doc, _ = run(capsys, "solve", "--nu", "2,1", "--z", "1/2,2,3.5", "--form", "orthogonal",
                       "--vectors")
    assert code == 0
    assert all(len(s["eigenvectors"]) == s["multiplicity"] for s in doc["solutions"])


def test_verify_plucker_all(capsys):
    code, doc, _ = run(capsys, "verify", "--n", "4", "--which", "plucker-all", "--seed", "7")
    assert code == 0 and doc["passed"] and doc["seed"] == 7
    assert {r["which"] for r in doc["reports"]} == {"plucker-all"}
    assert len(doc["reports"]) == 5 and all(r["checked"] > 0 for r in doc["reports"])


def test_verify_single_shape_with_given_parameters(capsys):
    code, doc, _ = run(capsys, "verify", "--nu", "2,1", "--which", "commutativity,translation",
                       "--z", "1,2,5", "--trials", "1")
    assert code == 0 and doc["z"] == ["1", "2", "5"]
    assert len(doc["trial_points"]) == 1


def test_dims(capsys):
    code, doc, _ = run(capsys, "dims", "--kappa", "4")
    assert code == 0 and doc["total"] == 5
    code, doc, _ = run(capsys, "dims", "--kappa", "2,1,1")
    assert doc["total"] == 10 and [row["dim"] for row in doc["table"]] == [1, 3, 2, 3, 1]


def test_relations(capsys):
    code, doc, _ = run(capsys, "relations", "--d", "2", "--m", "4", "--list")
    assert code == 0 and doc["count"] == 1 and len(doc["relations"]) == 1
    code, doc, _ = run(capsys, "relations", "--d", "2", "--m", "5")
    assert doc["count"] == 5 and "relations" not in doc


def test_solve_output_feeds_basis_and_positivity(capsys, tmp_path):
    out = tmp_path / "solve.json"
    assert main(["solve", "--nu", "2,1", "--z", "0.2,0.5,0.9", "--out", str(out)]) == 0
    capsys.readouterr()
    code, doc, _ = run(capsys, "positivity", "--input", str(out), "--mode", "tp-in-cell")
    assert code == 0 and doc["passed"] and len(doc["verdicts"]) == 2
    code, doc, _ = run(capsys, "basis", "--input", str(out))
    assert code == 0 and doc["passed"]
    for b in doc["bases"]:
        assert b["wronskian_echelon"][-1] in ("1", "1.0")
        assert float(b["wronskian_residual"]) <= 1e-8


def test_positivity_reports_failures(capsys, tmp_path):
    doc = {"nu": [2], "mode": "exact", "entries": [{"lam": [], "value": "-3"},
                                                  {"lam": [1], "value": "2"},
                                                  {"lam": [2], "value": "2"}]}
    path = tmp_path / "vec.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "positivity", "--input", str(path))
    assert code == 1 and not out["passed"]
    assert out["verdicts"][0]["witness"] == []


def test_malformed_inputs_exit_two(capsys, tmp_path):
    for argv in (["solve", "--nu", "1,2", "--z", "1,2,3"],
                 ["solve", "--nu", "2,1", "--z", "1,2"],
                 ["solve", "--nu", "2,1", "--z", "1,x,3"],
                 ["dims", "--kappa", "2,0"],
                 ["frobnicate"]):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out is None
        assert json.loads(err.strip().splitlines()[-1])["error"] == "input"
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    code, _, err = run(capsys, "positivity", "--input", str(bad))
    assert code == 2 and "message" in json.loads(err)


def test_solver_failure_exit_one(capsys):
    code, out, err = run(capsys, "solve", "--nu", "3,1", "--z", "1,2,3,4", "--tol-cluster", "0.5",
                         "--max-retries", "1")
    assert code == 1 and out is None and json.loads(err)["error"] == "solver"


def test_output_is_deterministic(capsys):
    main(["solve", "--nu", "3,2", "--z", "1,3,4,6,7", "--seed", "3"])
    first = capsys.readouterr().out
    main(["solve", "--nu", "3,2", "--z", "1,3,4,6,7", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_console_script_matches_in_process_run(capsys):
    env = dict(os.environ, BW_THREADS="1")
    proc = subprocess.run([sys.executable, "-m", "bethe_wronski.cli", "dims", "--kappa", "2,2"],
                          capture_output=True, text=True, env=env, check=False)
    assert proc.returncode == 0
    main(["dims", "--kappa", "2,2"])
    assert capsys.readouterr().out == proc.stdout
