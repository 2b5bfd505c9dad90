import io
import json
import subprocess
import sys

import pytest

from weylalcove import cli
from weylalcove.root_system import InvariantViolation


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == cli.SCHEMA_VERSION
    return doc


def test_fuse_e8():
    code, out, _ = run("fuse", "--algebra", "E8", "--level", "2", "1,0,0,0,0,0,0,0", "1,0,0,0,0,0,0,0")
    assert code == 0 and out.strip() == "0,0,0,0,0,0,0,0 ×1"


def test_fuse_unit():
    code, out, _ = run("fuse", "--algebra", "A1", "--level", "1", "0", "0")
    assert code == 0 and out.strip() == "0 ×1"


def test_alcove_e7():
    code, out, _ = run("alcove", "--algebra", "E7", "--level", "2")
    assert code == 0 and len(out.strip().splitlines()) == 6
    doc = run_json("alcove", "--algebra", "E7", "--level", "2")
    assert doc["algebra"] == "E7" and doc["level"] == 2 and doc["command"] == "alcove"
    assert doc["payload"][0] == [0] * 7 and len(doc["payload"]) == 6


def test_fuse_json_order():
    doc = run_json("fuse", "--algebra", "E7", "--level", "2", "0,0,0,0,0,0,1", "0,0,0,0,0,0,1")
    weights = [w for w, _ in doc["payload"]]
    assert weights[0] == [0] * 7
    assert all(m == 1 for _, m in doc["payload"]) and len(weights) == 4


def test_closure_and_classify():
    doc = run_json("closure", "--algebra", "E7", "--level", "2", "0,1,0,0,0,0,0")
    assert doc["payload"]["members"] == [[0] * 7, [0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 2]]
    assert doc["payload"]["classification"] == {"variant": "ExcE7_b"}
    doc = run_json("classify", "--algebra", "E8", "--level", "2", "0,0,0,0,0,0,0,0", "1,0,0,0,0,0,0,0")
    assert doc["payload"]["classification"]["variant"] == "ExcE8"
    code, out, _ = run("closure", "--algebra", "E7", "--level", "2", "0,0,0,0,0,1,0")
    assert code == 0 and "ExcE7_a" in out


def test_enumerate():
    doc = run_json("enumerate-closed", "--algebra", "E8", "--level", "2")
    assert [len(s["members"]) for s in doc["payload"]] == [1, 2, 3]
    code, _, err = run("enumerate-closed", "--algebra", "A2", "--level", "4", "--max-alcove", "3")
    assert code == 2 and "bound" in err


def test_modular_report():
    doc = run_json("modular", "--algebra", "E7", "--level", "2", "0,0,0,0,0,0,0", "0,0,0,0,0,1,0")
    p = doc["payload"]
    assert p["twists"][1] == [[0, 0, 0, 0, 0, 1, 0], {"num": 4, "den": 5}]
    assert p["verdict"] == "ModularAsIs"
    doc = run_json("modular", "--algebra", "E8", "--level", "2", "0,0,0,0,0,0,0,0", "1,0,0,0,0,0,0,0", "--exact-s")
    p = doc["payload"]
    assert p["verdict"] == "SpinModular" and p["ring"]["description"] == "Z/2"
    assert p["degenerates"][1] == {"weight": [1, 0, 0, 0, 0, 0, 0, 0], "parity": "odd", "invertible": True}
    assert set(p["s_matrix"][0][0]) == {"order", "coeffs"}
    code, out, _ = run("modular", "--algebra", "A1", "--level", "2")
    assert code == 0 and "verdict:" in out


def test_chart():
    doc = run_json("chart", "--algebra", "G2")
    assert doc["payload"][0]["match"] is True
    code, out, _ = run("chart")
    assert code == 0 and "MISMATCH" in out and "flagged" in out


def test_json_is_deterministic():
    args = ("enumerate-closed", "--algebra", "D4", "--level", "2", "--json")
    assert run(*args)[1] == run(*args)[1]


def test_rational_and_vector_encoding():
    assert cli.rational(0.5) == {"num": 1, "den": 2}
    from weylalcove.fusion import alcove_context
    ctx = alcove_context("A2", 1)
    assert cli.fusion_vector_json(ctx, {(0, 0): 1}) == [[[0, 0], 1]]


@pytest.mark.parametrize("argv", [
    ["fuse", "--algebra", "E8", "--level", "2", "1,0", "0,0,0,0,0,0,0,0"],
    ["fuse", "--algebra", "E8", "--level", "2", "x", "0,0,0,0,0,0,0,0"],
    ["fuse", "--algebra", "A1", "--level", "1", "3", "0"],
    ["alcove", "--algebra", "Q3", "--level", "1"],
    ["alcove", "--algebra", "A2"],
    ["alcove", "--algebra", "A2", "--level", "-1"],
    ["classify", "--algebra", "A1", "--level", "4", "0", "1"],
    ["modular", "--algebra", "A1", "--level", "4", "1"],
    ["nonsense"],
    [],
])
def test_usage_errors_exit_two(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


def test_invariant_violation_exits_three(monkeypatch):
    def boom(args, out):
        raise InvariantViolation("broken")
    monkeypatch.setitem(cli.COMMANDS, "alcove", boom)
    code, _, err = run("alcove", "--algebra", "A1", "--level", "1")
    assert code == 3 and "broken" in err


@pytest.mark.parametrize("results,code", [([True, True], 0), ([True, False], 1)])
def test_verify_exit_code(monkeypatch, results, code):
    from weylalcove import acceptance
    fake = [acceptance.CriterionResult(i + 1, "x", ok, "", 0.0, [] if ok else ["bad"]) for i, ok in enumerate(results)]

    def fake_run_all(cache_dir, report=None):
        for r in fake:
            if report:
                report(r)
        return fake
    monkeypatch.setattr(acceptance, "run_all", fake_run_all)
    got, out, _ = run("verify-paper")
    assert got == code and "criterion 1" in out
    got, out, _ = run("verify-paper", "--json")
    assert got == code and json.loads(out)["payload"][0]["criterion"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylalcove", "fuse", "--algebra", "A1", "--level", "1", "0", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0 ×1"
