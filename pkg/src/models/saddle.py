"""Saddle-point block system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .matrix import DenseMatrix, SymmetricMatrix


@dataclass(frozen=True)
class SaddlePointSystem:
    """K = [[H, Bᵀ], [B, 0]] with H (m×m) and B (n×m), n ≤ m.

    ``schur_complement`` is -B·H⁻¹·Bᵀ and ``factorization_residual`` the max-abs
    residual of K = L·diag(H, S)·Lᵀ; all three optional fields are None when H is
    singular.
    """

    h: SymmetricMatrix
    b: DenseMatrix
    assembled: SymmetricMatrix
    schur_complement: Optional[SymmetricMatrix] = None
    factorization_residual: Optional[float] = None
    congruence_holds: Optional[bool] = None

    @property
    def m(self) -> int:
        return self.h.dim

    @property
    def n(self) -> int:
        return self.b.rows

    @property
    def dim(self) -> int:
        return self.assembled.dim
