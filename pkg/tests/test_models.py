"""Tests for the pydantic payloads."""

import json

import pytest
from pydantic import ValidationError

from aiii_steinberg.models import (
    CheckResult,
    CountPayload,
    EnumerationEntry,
    FiberPayload,
    MatrixInput,
    VerifyPayload,
)


def test_dump_uses_aliases():
    """Assert dump writes camel case aliases."""
    entry = EnumerationEntry(omega="2x2x1::1:", dimension=5, a_plus=0, a_minus=0, b=0, c=0)
    data = json.loads(entry.dump())
    assert data == {"omega": "2x2x1::1:", "dimension": 5, "aPlus": 0, "aMinus": 0, "b": 0, "c": 0}
    assert EnumerationEntry.model_validate(data) == entry


def test_fiber_payload_alias():
    """Assert the fiber payload uses the lambda alias."""
    payload = FiberPayload(p=2, q=2, r=2, lam=[2], mu=[2], formula=4, parameters=[])
    assert json.loads(payload.dump())["lambda"] == [2]


def test_count_payload_ok():
    """Assert the ok flag of the count payload."""
    assert json.loads(CountPayload(p=3, q=2, r=2, formula=34, enumerated=34).dump())["ok"] is True
    assert not CountPayload(p=3, q=2, r=2, formula=34, enumerated=33).ok


def test_verify_payload_passed():
    """Assert the sweep payload passes only if every check does."""
    good = CheckResult(key="counts", name="Counts", checked=3, failures=[])
    bad = CheckResult(key="grs", name="gRS", checked=3, failures=["2x2x1::1:"])
    assert VerifyPayload(p=2, q=2, r=[1], seed=0, bound=9, trials=3, checks=[good]).passed
    payload = VerifyPayload(p=2, q=2, r=[1], seed=0, bound=9, trials=3, checks=[good, bad])
    assert not payload.passed
    assert json.loads(payload.dump())["checks"][1]["passed"] is False


def test_matrix_input_from_text():
    """Assert a matrix file parses."""
    matrix = MatrixInput.from_text("# span(e1 + f2, f1)\n2 2 2\n1 1\n0 0\n1 2\n1 1\n").to_matrix()
    assert matrix.shape == (4, 2)
    assert matrix.rank() == 2
    assert MatrixInput.from_text("1 1 1\n1/2\n-3\n").to_matrix().to_json() == [["1/2"], [-3]]
    assert MatrixInput.from_text("1 1 0\n").to_matrix().shape == (2, 0)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2 2\n1\n1\n1\n1",
        "1 1 1\n1\n",
        "1 1 1\n1 2\n3 4\n",
        "1 1 1\nx\n1\n",
        "1 1 1\n1/0\n1\n",
        "1 1 3\n1 1 1\n1 1 1\n",
        "-1 1 0\n",
    ],
)
def test_matrix_input_rejects_bad_text(text):
    """Assert malformed matrix files are rejected."""
    with pytest.raises(ValidationError):
        MatrixInput.from_text(text)
