import io
import json
import subprocess
import sys

import pytest

from gl3branch.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_intertwine_example():
    code, out, _ = run("intertwine", "--M", "2", "--N", "2", "--c", "3,3,4", "--d", "3,3,4")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == "gl3branch/1"
    assert data["i_VV"] == [-1, 1] and data["i_VV_text"] == "q - 1"


def test_dims_example():
    code, out, _ = run("dims", "--M", "1", "--N", "2", "--triple", "1,2,2", "--q0", "5")
    data = json.loads(out)
    assert code == 0
    assert data["dims"][0]["dim_V"]["text"] == "q^5 + 2q^4 + 2q^3 + q^2"
    assert data["dims"][0]["dim_V"]["at_q0"] == 25 * 186


def test_verify_example():
    code, out, _ = run("verify", "--p", "5", "--M", "0", "--N", "1", "--level", "1")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["passed"] == 4
    assert all(r["status"] == "pass" for r in data["pairs"])


def test_verify_mismatch_exit_code(monkeypatch):
    import gl3branch.oracle as oracle

    real = oracle.count_S
    monkeypatch.setattr(oracle, "count_S", lambda c, d, m: real(c, d, m) + 1)
    code, out, _ = run("verify", "--M", "0", "--N", "1", "--c", "1,1,1", "--d", "1,1,1")
    assert code == 2 and json.loads(out)["failed"] == 1


def test_list_and_table_and_diagram():
    code, out, _ = run("list", "--M", "2", "--N", "2", "--bound", "4,4,4")
    assert code == 0 and len(out.splitlines()) == 14
    code, out, _ = run("list", "--M", "1", "--N", "2", "--sum-max", "9", "--format", "json")
    assert len(json.loads(out)["triples"]) == 13
    code, out, _ = run("table", "--M", "1", "--N", "2", "--sum-max", "9", "--q0", "7")
    assert code == 0 and len(out.splitlines()) == 14
    code, out, _ = run("diagram", "--M", "2", "--N", "2", "--bound", "4,4,4")
    assert code == 0 and out.startswith("digraph")


@pytest.mark.parametrize(
    "argv",
    [
        ["intertwine", "--M", "2", "--N", "2", "--c", "3,3", "--d", "3,3,4"],
        ["intertwine", "--M", "2", "--N", "2", "--c", "a,b,c", "--d", "3,3,4"],
        ["list", "--M", "3", "--N", "2", "--bound", "4,4,4"],
        ["dims", "--M", "1", "--N", "2", "--triple", "1,2,2", "--q0", "3"],
        ["table", "--M", "1", "--N", "2", "--bound", "99,99,99"],
        ["table", "--M", "1", "--N", "2"],
        ["dims", "--M", "2", "--N", "2", "--triple", "1,2,2"],
        ["verify", "--M", "0", "--N", "2", "--level", "1"],
        ["verify", "--p", "4", "--M", "0", "--N", "1"],
        ["nonsense"],
    ],
)
def test_validation_errors(argv):
    code, _, _ = run(*argv)
    assert code == 1


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "gl3branch", "list", "--M", "1", "--N", "1", "--bound", "1,1,1"],
        capture_output=True, text=True,
    )
    assert r.returncode == 0 and r.stdout.strip() == "(1,1,1)"
