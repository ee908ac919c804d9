"""Shared test fixtures for inertia-diagnostics tests."""

import tempfile
from pathlib import Path

import numpy as np
import pytest

from src.generators.example import avoidance_example
from src.models.matrix import SymmetricMatrix


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every run draws the same matrices."""
    return np.random.default_rng(20240601)


@pytest.fixture
def example_pair():
    """The 5×5 pair with three real and two complex eigenvalues of M⁻¹A."""
    return avoidance_example()


@pytest.fixture
def indefinite_pair():
    """Diagonal pair with pencil eigenvalues (-2, 0.5, 3)."""
    a = SymmetricMatrix.diagonal([-2.0, 1.0, 3.0])
    m = SymmetricMatrix.diagonal([1.0, 2.0, 1.0])
    return a, m


@pytest.fixture
def matrix_market_text() -> str:
    """Symmetric coordinate file for a 3×3 tridiagonal matrix."""
    return (
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "% tridiagonal test matrix\n"
        "3 3 5\n"
        "1 1 2.0\n"
        "2 1 -1.0\n"
        "2 2 2.0\n"
        "3 2 -1.0\n"
        "3 3 2.0\n"
    )
