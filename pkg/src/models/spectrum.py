"""Spectral result types: inertia, eigendecompositions, factorizations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, zero and negative eigenvalues of a symmetric matrix."""

    pos: int
    zero: int
    neg: int

    def __post_init__(self) -> None:
        if min(self.pos, self.zero, self.neg) < 0:
            raise ValueError(f"Inertia counts must be nonnegative: {self.as_tuple()}")

    @property
    def dim(self) -> int:
        return self.pos + self.zero + self.neg

    @property
    def is_invertible(self) -> bool:
        return self.zero == 0

    @property
    def is_positive_definite(self) -> bool:
        return self.zero == 0 and self.neg == 0

    @property
    def is_negative_definite(self) -> bool:
        return self.zero == 0 and self.pos == 0

    @property
    def is_definite(self) -> bool:
        return self.is_positive_definite or self.is_negative_definite

    def negated(self) -> "Inertia":
        """Inertia of -A."""
        return Inertia(pos=self.neg, zero=self.zero, neg=self.pos)

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.pos + other.pos, self.zero + other.zero, self.neg + other.neg)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.pos, self.zero, self.neg)

    def to_dict(self) -> Dict[str, int]:
        return {"p": self.pos, "z": self.zero, "n": self.neg}

    @classmethod
    def from_values(cls, values: npt.ArrayLike, zero_tolerance: float) -> "Inertia":
        """Sign counts of a real array with |v| <= zero_tolerance counted as zero."""
        arr = np.asarray(values, dtype=np.float64)
        zero = int(np.count_nonzero(np.abs(arr) <= zero_tolerance))
        pos = int(np.count_nonzero(arr > zero_tolerance))
        neg = int(np.count_nonzero(arr < -zero_tolerance))
        return cls(pos=pos, zero=zero, neg=neg)

    def __str__(self) -> str:
        return f"({self.pos}, {self.zero}, {self.neg})"


@dataclass(frozen=True)
class SymEigenDecomposition:
    """Ascending eigenvalues with orthogonal eigenvector matrix Q (columns)."""

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: npt.NDArray[np.float64]
    sweeps: int = 0

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    def orthogonality_error(self) -> float:
        q = self.eigenvectors
        return float(np.max(np.abs(q.T @ q - np.eye(self.dim))))

    def residual(self, source: npt.NDArray[np.float64]) -> float:
        q = self.eigenvectors
        return float(np.max(np.abs(source @ q - q * self.eigenvalues)))


@dataclass(frozen=True)
class PivotBlock:
    """One 1×1 or 2×2 diagonal block of a symmetric indefinite factorization."""

    start: int
    size: int
    values: Tuple[float, ...]

    @property
    def stop(self) -> int:
        return self.start + self.size


@dataclass(frozen=True)
class LdltFactorization:
    """P·A·Pᵀ = L·D·Lᵀ with D block diagonal (1×1 and 2×2 blocks).

    ``permutation[i]`` is the original row index moved to position i. ``block_values``
    holds the pivot for 1×1 blocks and the two eigenvalues of 2×2 blocks.
    """

    permutation: npt.NDArray[np.int64]
    blocks: Tuple[PivotBlock, ...]
    lower: npt.NDArray[np.float64]
    diagonal: npt.NDArray[np.float64]
    zero_tolerance: float

    @property
    def dim(self) -> int:
        return int(self.permutation.shape[0])

    @property
    def block_structure(self) -> List[int]:
        return [block.size for block in self.blocks]

    @property
    def block_values(self) -> List[Tuple[float, ...]]:
        return [block.values for block in self.blocks]

    def inertia(self) -> Inertia:
        values = [v for block in self.blocks for v in block.values]
        return Inertia.from_values(values, self.zero_tolerance)


@dataclass(frozen=True)
class GeneralSpectrum:
    """Eigenvalues of a real square matrix, sorted by (re, im)."""

    eigenvalues: Tuple[complex, ...]
    real_tolerance: float = 1e-8
    iterations: int = field(default=0, compare=False)

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    def is_real(self, value: complex) -> bool:
        return abs(value.imag) <= self.real_tolerance * (1.0 + abs(value))

    @property
    def all_real(self) -> bool:
        return all(self.is_real(v) for v in self.eigenvalues)

    def real_parts(self) -> npt.NDArray[np.float64]:
        return np.array([v.real for v in self.eigenvalues], dtype=np.float64)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eigenvalues": [{"re": v.real, "im": v.imag} for v in self.eigenvalues],
            "realTolerance": self.real_tolerance,
        }


def sort_spectrum(values: List[complex]) -> Tuple[complex, ...]:
    """Deterministic (re, im) ascending order."""
    return tuple(sorted(values, key=lambda z: (z.real, z.imag)))
