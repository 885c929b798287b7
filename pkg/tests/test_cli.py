"""Tests for the command line interface."""

import json

import pytest

from aiii_steinberg.cli import run


def test_count(capsys):
    """Assert count prints the formula against the enumeration."""
    assert run(["count", "3", "2", "2"]) == 0
    assert capsys.readouterr().out == "formula=34 enumerated=34 OK\n"


def test_count_json(capsys):
    """Assert count emits its payload as JSON."""
    assert run(["count", "2", "2", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"p": 2, "q": 2, "r": 2, "formula": 16, "enumerated": 16, "ok": True}


def test_report(capsys, example_data):
    """Assert report gives the golden data of the worked example."""
    assert run(["report", "5x3x4:4-1,2-3:5:2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["omega"] == example_data["omega"]
    assert data["lambda"] == [2, 1, 1, 1]
    assert data["mu"] == [2, 1]
    assert data["Lambda"] == example_data["Lambda"]
    assert data["rankMatrix"] == example_data["rankMatrix"]
    assert data["grs"] == example_data["grs"]
    assert data["dual"] == example_data["dual"]


def test_enumerate(capsys):
    """Assert the single r = 0 parameter is listed with its dimension."""
    assert run(["enumerate", "2", "2", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("2x2x0:")
    assert " dim=2 " in lines[0]


def test_enumerate_json(capsys):
    """Assert enumerate lists every parameter with its invariants."""
    assert run(["enumerate", "2", "2", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == len(data["parameters"]) == 16
    assert {"omega", "dimension", "aPlus", "aMinus", "b", "c"} == set(data["parameters"][0])


def test_hasse(capsys):
    """Assert hasse prints DOT or text with one line per cover."""
    assert run(["hasse", "2", "2", "2", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph hasse {")
    assert run(["hasse", "2", "1", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count(" > ") == 5
    assert out.splitlines()[-1].startswith("dimensions ")


def test_fiber(capsys):
    """Assert fiber prints the multiplicity and one line per preimage."""
    assert run(["fiber", "2", "2", "2", "--lambda", "2", "--mu", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lambda=(2) mu=(2) formula=4 enumerated=4"
    assert len(lines) == 5


def test_classify(capsys, tmp_path):
    """Assert classify reads a matrix file and prints its parameter."""
    path = tmp_path / "subspace.txt"
    path.write_text("2 2 2\n1 1\n0 0\n1 2\n1 1\n", encoding="utf-8")
    assert run(["classify", "--matrix", str(path)]) == 0
    assert capsys.readouterr().out.startswith("2x2x2:1-2::1 dim=")


def test_grassmann(capsys):
    """Assert grassmann lists the six orbits for (2, 2, 2)."""
    assert run(["grassmann", "2", "2", "2"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 6


def test_verify(capsys):
    """Assert a small sweep passes."""
    assert run(["verify", "2", "1", "--trials", "2", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "OK"
    assert "FAIL " not in out


def test_verify_json_with_random_samples(capsys):
    """Assert --random-samples limits the oracle check."""
    assert run(["verify", "2", "2", "2", "--random-samples", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["r"] == [2]
    oracle = next(check for check in data["checks"] if check["key"] == "oracle")
    assert oracle["checked"] == 4


def test_output_file(capsys, tmp_path):
    """Assert --output writes to a file instead of stdout."""
    target = tmp_path / "count.txt"
    assert run(["count", "2", "2", "2", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == "formula=16 enumerated=16 OK\n"


def test_help():
    """Assert --help exits cleanly."""
    assert run(["--help"]) == 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["count", "x", "2", "2"],
        ["draw", "1", "1"],
        ["fiber", "2", "2", "2", "--lambda", "2,x", "--mu", "2"],
        ["classify"],
    ],
)
def test_usage_errors(argv, capsys):
    """Assert argument errors exit with code 2."""
    assert run(argv) == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "5x3x4:2-3"],
        ["count", "1", "1", "3"],
        ["count", "7", "1", "1"],
        ["count", "2", "2", "2", "--format", "dot"],
        ["fiber", "3", "2", "2", "--lambda", "1,1", "--mu", "2"],
        ["classify", "--matrix", "/nonexistent/subspace.txt"],
        ["verify", "2", "2", "--bound", "0"],
    ],
)
def test_invalid_input(argv, capsys):
    """Assert invalid values and refused sizes exit with code 3."""
    assert run(argv) == 3
    assert capsys.readouterr().err


def test_bad_matrix_file(capsys, tmp_path):
    """Assert malformed or dependent matrix files are rejected."""
    path = tmp_path / "bad.txt"
    path.write_text("1 1 1\n1\n", encoding="utf-8")
    assert run(["classify", "--matrix", str(path)]) == 3
    dependent = tmp_path / "dependent.txt"
    dependent.write_text("2 1 2\n1 2\n0 0\n1 2\n", encoding="utf-8")
    assert run(["classify", "--matrix", str(dependent)]) == 3
    assert "invalid input" in capsys.readouterr().err
