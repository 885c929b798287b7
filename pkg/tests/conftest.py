"""Fixtures for the AIII Steinberg orbit engine tests."""

import json
import random
from pathlib import Path

import pytest

from aiii_steinberg.orbit import OrbitGraph, enumerate_parameters, parse_omega

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> dict:
    """Load a JSON fixture by file name."""
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def example_data() -> dict:
    """Golden data of the worked example parameter."""
    return load_fixture("example_omega.json")


@pytest.fixture
def example_omega(example_data) -> OrbitGraph:
    """The parameter 5x3x4:2-3,4-1:5:2."""
    return parse_omega(example_data["omega"])


@pytest.fixture(scope="session")
def enumeration_222() -> list[OrbitGraph]:
    """All 16 parameters for (p,q,r) = (2,2,2)."""
    return enumerate_parameters(2, 2, 2)


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source."""
    return random.Random(20240611)
