"""Tests for the conormal sampler and the matrix oracle."""

import pytest

from aiii_steinberg import oracle
from aiii_steinberg.exceptions import SteinbergGenericityError, SteinbergValidationError
from aiii_steinberg.linalg import RationalMatrix
from aiii_steinberg.oracle import (
    dual_element,
    is_conormal,
    jordan_type,
    oracle_phi_k,
    oracle_phi_s,
    power_identity_check,
    sample_conormal,
    sample_to_json,
    signed_jordan_type,
)
from aiii_steinberg.orbit import enumerate_parameters, representative_matrix
from aiii_steinberg.steinberg import phi_k, phi_s
from aiii_steinberg.tableau import Partition

ORACLE_SIZES = [(p, q, r) for p in range(4) for q in range(4) for r in range(p + q + 1)]


def test_jordan_type():
    """Assert Jordan types of nilpotent matrices."""
    shift = RationalMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert jordan_type(shift) == Partition((3,))
    assert jordan_type(RationalMatrix.zeros(2, 2)) == Partition((1, 1))
    block = RationalMatrix.from_rows([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert jordan_type(block) == Partition((2, 2))
    with pytest.raises(SteinbergValidationError):
        jordan_type(RationalMatrix.identity(2))
    with pytest.raises(SteinbergValidationError):
        jordan_type(RationalMatrix.zeros(2, 3))


def test_signed_jordan_type():
    """Assert signed Jordan types."""
    x = RationalMatrix.from_rows([[0, 1], [0, 0]])
    assert signed_jordan_type(x, 1, 1).row_strings() == ["+-"]
    assert signed_jordan_type(x.transpose(), 1, 1).row_strings() == ["-+"]
    assert signed_jordan_type(RationalMatrix.zeros(3, 3), 2, 1).row_strings() == ["+", "+", "-"]
    with pytest.raises(SteinbergValidationError):
        signed_jordan_type(RationalMatrix.from_rows([[0, 1], [0, 0]]), 2, 0)


def test_sample_is_conormal(example_omega):
    """Assert a sample of the worked example lies in the conormal direction."""
    element = sample_conormal(example_omega, seed=7)
    x = element.x
    assert x.shape == (8, 8)
    assert is_conormal(example_omega, x)
    assert (x @ x).is_zero()
    assert (x @ representative_matrix(example_omega)).is_zero()
    assert element.a.is_strictly_upper_triangular()
    assert element.d.is_strictly_upper_triangular()
    assert element.x_k + element.x_s == x


def test_sampling_is_deterministic(example_omega):
    """Assert the same seed gives the same sample."""
    assert sample_conormal(example_omega, seed="a/0/1") == sample_conormal(example_omega, seed="a/0/1")
    assert sample_to_json(sample_conormal(example_omega, seed=3)) == sample_to_json(
        sample_conormal(example_omega, seed=3)
    )


def test_sample_rejects_bad_bound(example_omega):
    """Assert a non-positive bound is rejected."""
    with pytest.raises(SteinbergValidationError):
        sample_conormal(example_omega, bound=0)


def test_sample_json_has_integer_entries(example_omega):
    """Assert sample JSON."""
    data = sample_to_json(sample_conormal(example_omega, bound=5, seed=1))
    assert data["omega"] == example_omega.canonical()
    assert all(isinstance(entry, int) for row in data["x"] for entry in row)


def test_is_conormal_rejects_non_members(example_omega):
    """Assert the membership test."""
    assert not is_conormal(example_omega, RationalMatrix.identity(8))
    assert not is_conormal(example_omega, RationalMatrix.zeros(3, 3))
    assert is_conormal(example_omega, RationalMatrix.zeros(8, 8))


def test_oracle_on_example(example_omega):
    """Assert the oracle reproduces both images of the worked example."""
    assert oracle_phi_k(example_omega) == phi_k(example_omega)
    assert oracle_phi_s(example_omega) == phi_s(example_omega)


@pytest.mark.parametrize(("p", "q", "r"), ORACLE_SIZES)
def test_oracle_agrees_with_steinberg_maps(p, q, r):
    """Assert the oracle agrees with both maps on every small parameter."""
    for omega in enumerate_parameters(p, q, r):
        assert oracle_phi_k(omega) == phi_k(omega)
        assert oracle_phi_s(omega) == phi_s(omega)


def test_oracle_on_random_parameters_of_size_four(rng):
    """Assert agreement on a seeded sample at p = q = 4."""
    graphs = [omega for r in range(9) for omega in enumerate_parameters(4, 4, r)]
    for omega in rng.sample(graphs, 50):
        assert oracle_phi_k(omega, seed=11) == phi_k(omega)
        assert oracle_phi_s(omega, seed=11) == phi_s(omega)


def test_power_identities_on_seeded_samples(rng):
    """Assert the power identities on seeded samples."""
    graphs = [
        omega
        for p in range(1, 5)
        for q in range(1, 5)
        for r in range(p + q + 1)
        for omega in enumerate_parameters(p, q, r)
    ]
    for trial, omega in enumerate(rng.sample(graphs, 100)):
        element = sample_conormal(omega, seed=trial)
        assert (element.x @ element.x).is_zero()
        assert power_identity_check(element, depth=3)


def test_dual_element_is_conormal_for_the_dual(enumeration_222):
    """Assert a mirrored sample belongs to the dual parameter."""
    for omega in enumeration_222:
        mirrored = dual_element(sample_conormal(omega, seed=5))
        assert is_conormal(mirrored.omega, mirrored.x)


def test_genericity_error_after_retries(example_omega, monkeypatch):
    """Assert the oracle gives up after its retries."""
    monkeypatch.setattr(oracle, "_dominant", lambda profiles, at_least: None)
    with pytest.raises(SteinbergGenericityError):
        oracle_phi_k(example_omega, retry_cap=1)


def test_oracle_needs_a_trial(example_omega):
    """Assert at least one trial is required."""
    with pytest.raises(SteinbergValidationError):
        oracle_phi_s(example_omega, trials=0)


@pytest.mark.parametrize(("p", "q"), [(2, 2), (3, 1), (1, 3)])
def test_degenerate_conormal_directions_are_zero(p, q):
    """Assert r = 0 and r = p + q only sample zero."""
    for r in (0, p + q):
        (omega,) = enumerate_parameters(p, q, r)
        assert sample_conormal(omega, seed=r).x.is_zero()
