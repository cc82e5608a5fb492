from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from kmchamber.cli import main

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")


def d(name):
    return os.path.join(DATA, name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "-q", d("kronecker.json"))
    assert code == 0
    assert out.strip() == "Affine, witness [1, 1] (Au = [0, 0])"


def test_classify_json_golden(capsys):
    code, out, _ = run(capsys, "classify", "-q", d("kronecker.json"), "--json")
    assert code == 0
    assert out == '{"Au": [0,0],"matrix": [[2,-2],[-2,2]],"tag": "Affine","witness": [1,1]}\n'


def test_check_golden(capsys):
    code, out, _ = run(capsys, "check", "-q", d("kronecker.json"), "-z", d("zii.json"), "--height", "10", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["X_reg"] == {"height": 10, "margin2": "1", "status": "InAtHeight"}
    assert obj["sector"]["phi_I_is_half"] is True
    assert obj["sector"]["normalized"]["rotation"] == ["1", "0"]


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", "-q", d("kronecker.json"), "-z", d("zii.json"), "--height", "10")
    assert code == 0
    assert "X_reg: InAtHeight" in out and "margin^2 = 1" in out


def test_check_outside_exits_one(capsys):
    code, out, _ = run(capsys, "check", "-q", d("kronecker.json"), "-z", d("z_outside.json"), "--json")
    assert code == 1
    assert json.loads(out)["X"] == {"height": 12, "margin2": "0", "status": "OutCertified", "witness": [1, 1]}


def test_loop_error(capsys):
    code, _, err = run(capsys, "classify", "-q", d("has_loop.json"))
    assert code == 2
    assert json.loads(err)["error"] == "LoopError"


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "-q", d("missing.json"))
    assert code == 2 and json.loads(err)["error"] == "InputError"


def test_bad_charge(capsys, tmp_path):
    f = tmp_path / "z.json"
    f.write_text('{"z": [[1, "x"]]}')
    code, _, err = run(capsys, "margin", "-q", d("kronecker.json"), "-z", str(f))
    assert code == 2 and "error" in json.loads(err)


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "roots", "-q", d("markov.json"), "--height", "3000")
    assert code == 3 and json.loads(err)["error"] == "BudgetExceeded"


def test_cap_exit_code(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"waypoints": [
        {"z": [["0", "1/10"], ["-1", "1"]]},
        {"z": [["0", "1/10"], ["-1", "-9/100"]]},
    ]}))
    code, _, err = run(capsys, "cross", "-q", d("kronecker.json"), "-p", str(f), "--cap", "3")
    assert code == 3 and json.loads(err)["error"] == "CapExceeded"


def test_roots_listing(capsys):
    code, out, _ = run(capsys, "roots", "-q", d("kronecker.json"), "--height", "4", "--json")
    rows = json.loads(out)["roots"]
    assert [r["root"] for r in rows] == [[1, 0], [0, 1], [1, 1], [2, 1], [1, 2], [2, 2]]
    code, out, _ = run(capsys, "roots", "-q", d("kronecker.json"), "--height", "21", "--imaginary", "--json")
    assert len(json.loads(out)["roots"]) == 10


def test_cone(capsys):
    code, out, _ = run(capsys, "cone", "-q", d("triple_kronecker.json"), "--height", "3", "--json")
    assert sorted(json.loads(out)["generators"]) == [[1, 1], [1, 2], [2, 1]]


def test_locate(capsys):
    code, out, _ = run(capsys, "locate", "-q", d("kronecker.json"), "-z", d("z_scrambled.json"), "--json")
    assert code == 0
    assert out == '{"charge": {"z": [["3","2"],["-2","0"]]},"word": [2]}\n'


def test_cross(capsys):
    code, out, _ = run(capsys, "cross", "-q", d("kronecker.json"), "-p", d("path_single.json"), "--json")
    assert code == 0
    assert json.loads(out) == {
        "crossings": [{"i": 2, "segment": 0, "side": "-", "t": "1/2"}],
        "kmatrix": [[1, 0], [2, -1]],
        "verified": True,
        "word": [[2, -1]],
    }


def test_loop(capsys):
    code, out, _ = run(capsys, "loop", "-q", d("kronecker.json"), "-p", d("loop_rotation.json"), "--json")
    assert code == 0 and json.loads(out) == {"shift": 2}


def test_twist_and_simplify(capsys):
    code, out, _ = run(capsys, "twist", "-q", d("kronecker.json"), "--word", "-2", "--json")
    assert json.loads(out)["kmatrix"] == [[1, 0], [2, -1]]
    code, out, _ = run(capsys, "simplify", "-q", d("a2.json"), "--word", "1,2,1,-2,-1", "--json")
    assert len(json.loads(out)["letters"]) <= 3


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", "-q", d("kronecker.json"), "--json")
    assert code == 0
    assert json.loads(out) == {"relations": [{"a_ij": -2, "holds": True, "kind": "free", "pair": [1, 2]}]}


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "-q", "kronecker.json"],
        ["check", "-q", "kronecker.json", "-z", "zii.json", "--height", "10"],
        ["cross", "-q", "kronecker.json", "-p", "path_out_and_back.json"],
        ["roots", "-q", "markov.json", "--height", "6"],
    ],
)
def test_json_output_is_byte_stable(capsys, argv):
    argv = [d(a) if a.endswith(".json") else a for a in argv] + ["--json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "kmchamber", "classify", "-q", d("has_loop.json")],
        capture_output=True, text=True,
    )
    assert out.returncode == 2
    assert json.loads(out.stderr) == {"error": "LoopError", "message": "loop at vertex 1"}
