"""Helpers shared by unit and integration tests."""

from typing import Iterable, Iterator, List, Tuple

import numpy as np

from src.generators import random_pair
from src.models.matrix import SymmetricMatrix


def random_symmetric(rng: np.random.Generator, dim: int) -> SymmetricMatrix:
    """Gaussian symmetric matrix."""
    g = rng.standard_normal((dim, dim))
    return SymmetricMatrix(0.5 * (g + g.T))


def match_spectra(actual: Iterable[complex], expected: Iterable[complex]) -> float:
    """Largest distance after greedily pairing each expected value with its nearest actual value."""
    remaining: List[complex] = [complex(v) for v in actual]
    targets = [complex(v) for v in expected]
    assert len(remaining) == len(targets), f"spectrum sizes differ: {len(remaining)} vs {len(targets)}"

    worst = 0.0
    for target in targets:
        distances = [abs(v - target) for v in remaining]
        index = int(np.argmin(distances))
        worst = max(worst, distances[index])
        remaining.pop(index)
    return worst


def suite_pairs(
    mode: str, cases: int, seed: int, dims: Tuple[int, int] = (2, 8)
) -> Iterator[Tuple[SymmetricMatrix, SymmetricMatrix]]:
    """``cases`` seeded random pairs cycling through the inclusive dimension range."""
    low, high = dims
    span = high - low + 1
    for case in range(cases):
        yield random_pair(low + case % span, seed, inertia=mode, index=case // span)
