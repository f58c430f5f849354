import json
import subprocess
import sys

import pytest

from s1redux.cli import main
from s1redux.nerve import action_groupoid, group_groupoid
from s1redux.finite_groups import cyclic_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze(capsys):
    code, doc = run(capsys, "analyze", "--weights=1,1,-1,-1", "--level", "0")
    assert code == 0 and doc["outcome"] == "WEAKLY_UNREPRESENTABLE"
    code, doc = run(capsys, "analyze", "--weights=1,-1", "--json")
    assert code == 0 and doc["schema"] == "s1redux/1" and doc["hilbert"]["k"] == 4


def test_input_errors(capsys):
    assert run(capsys, "analyze", "--weights=2,-4")[0] == 1
    assert run(capsys, "analyze", "--weights=0,0")[0] == 1
    assert run(capsys, "analyze", "--weights=x")[0] == 1
    assert run(capsys, "analyze", "--weights=-1,-2", "--level", "1")[0] == 1
    assert run(capsys, "bogus")[0] == 1


def test_hilbert(capsys):
    code, doc = run(capsys, "hilbert", "--weights=2,-3")
    assert code == 0 and doc["k"] == 4 and doc["complete"] and not doc["warnings"]
    code, doc = run(capsys, "hilbert", "--weights=2,-3", "--degree-cap", "3")
    assert code == 0 and not doc["complete"] and doc["warnings"]


def test_homotopy(capsys):
    code, doc = run(capsys, "homotopy", "--l1", "3", "--l2", "5")
    assert code == 0 and doc["status"] == "NoSolution"


def test_nerve(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(group_groupoid(cyclic_group(3)).to_json()))
    code, doc = run(capsys, "nerve", "--input", str(path), "--check", "pi1")
    assert code == 0 and doc["components"][0]["pi1"] == "Z_3"
    code, doc = run(capsys, "nerve", "--input", str(path), "--check", "simplicial")
    assert code == 0 and doc["ok"]
    act = tmp_path / "a.json"
    act.write_text(json.dumps({"group": "Z_4", "set": ["a", "b"],
                               "action": [[0, 1], [1, 0], [0, 1], [1, 0]]}))
    code, doc = run(capsys, "nerve", "--input", str(act))
    assert [c["pi1"] for c in doc["components"]] == ["Z_2"]
    assert run(capsys, "nerve", "--input", str(tmp_path / "missing.json"))[0] == 1


def test_nerve_violation_exit_code(capsys, tmp_path):
    G = group_groupoid(cyclic_group(3))
    doc = G.to_json()
    for entry in doc["compose"]:
        if entry[:2] == ["0", "1"]:
            entry[2] = "2"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    # construction validates the table, so a corrupted file is an input error
    assert run(capsys, "nerve", "--input", str(path), "--check", "simplicial")[0] == 1


def test_audit(capsys):
    code, doc = run(capsys, "audit", "--max-n", "3", "--max-weight", "3")
    assert code == 0 and doc["ok"] and doc["violations"] == []


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "s1redux", "analyze", "--weights=1,2", "--level", "0.5"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["outcome"] == "REGULAR_ORBIFOLD"
