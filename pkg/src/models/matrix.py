"""Dense matrix carriers for the diagnostics kernel."""

from __future__ import annotations

from typing import Any, Dict, Sequence, Union

import numpy as np
import numpy.typing as npt

ArrayLike = Union[npt.ArrayLike, Sequence[Sequence[float]]]


class SymmetricMatrix:
    """Dense real symmetric n×n matrix.

    The lower triangle is authoritative: the upper triangle is always rebuilt as its
    mirror, so the stored array is exactly symmetric. Entries must be finite.
    """

    __slots__ = ("_data",)

    def __init__(self, entries: ArrayLike) -> None:
        array = np.array(entries, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"SymmetricMatrix needs a square 2-D array, got shape {array.shape}")
        if array.shape[0] < 1:
            raise ValueError("SymmetricMatrix dimension must be at least 1")
        if not np.all(np.isfinite(array)):
            raise ValueError("SymmetricMatrix entries must be finite")

        lower = np.tril(array)
        data = lower + np.tril(lower, -1).T
        data.setflags(write=False)
        self._data = data

    @classmethod
    def from_array(cls, entries: ArrayLike, symmetrize: bool = False) -> "SymmetricMatrix":
        """Build from a full array, averaging with the transpose when requested."""
        array = np.array(entries, dtype=np.float64)
        if symmetrize:
            array = 0.5 * (array + array.T)
        return cls(array)

    @classmethod
    def identity(cls, dim: int) -> "SymmetricMatrix":
        return cls(np.eye(dim))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "SymmetricMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @property
    def dim(self) -> int:
        return int(self._data.shape[0])

    @property
    def data(self) -> npt.NDArray[np.float64]:
        """Read-only view of the full symmetric array."""
        return self._data

    def to_array(self) -> npt.NDArray[np.float64]:
        """Writable copy of the full symmetric array."""
        return np.array(self._data)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._data)))

    def default_zero_tolerance(self) -> float:
        """Scale-aware zero threshold 1e-12 · dim · max|entry|."""
        return 1e-12 * self.dim * self.max_abs()

    def scaled(self, factor: float) -> "SymmetricMatrix":
        return SymmetricMatrix(factor * self._data)

    def __add__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        return SymmetricMatrix(self._data + other.data)

    def __sub__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        return SymmetricMatrix(self._data - other.data)

    def __neg__(self) -> "SymmetricMatrix":
        return SymmetricMatrix(-self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return bool(np.array_equal(self._data, other.data))

    def __hash__(self) -> int:
        return hash(self._data.tobytes())

    def __repr__(self) -> str:
        return f"SymmetricMatrix(dim={self.dim})"

    def to_dict(self) -> Dict[str, Any]:
        return {"dim": self.dim, "entries": self._data.tolist()}


class DenseMatrix:
    """Dense real rows×cols matrix (rectangular blocks, nonsymmetric products)."""

    __slots__ = ("_data",)

    def __init__(self, entries: ArrayLike) -> None:
        array = np.array(entries, dtype=np.float64)
        if array.ndim == 1:
            array = array.reshape(1, -1)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"DenseMatrix needs a non-empty 2-D array, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("DenseMatrix entries must be finite")
        array.setflags(write=False)
        self._data = array

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def data(self) -> npt.NDArray[np.float64]:
        return self._data

    def to_array(self) -> npt.NDArray[np.float64]:
        return np.array(self._data)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self._data.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return bool(np.array_equal(self._data, other.data))

    def __hash__(self) -> int:
        return hash((self._data.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"DenseMatrix(rows={self.rows}, cols={self.cols})"
