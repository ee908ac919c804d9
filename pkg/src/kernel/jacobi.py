"""Cyclic Jacobi eigensolver for dense symmetric matrices."""

import logging
import math
from typing import Optional

import numpy as np

from ..models.matrix import SymmetricMatrix
from ..models.spectrum import SymEigenDecomposition
from ..utils.hash import compute_matrix_hash
from .errors import ConvergenceError

logger = logging.getLogger(__name__)

# Off-diagonal Frobenius mass, relative to the whole matrix, accepted as diagonal
OFF_DIAGONAL_TOLERANCE = 1e-14


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def sym_eigen(matrix: SymmetricMatrix, max_sweeps: Optional[int] = None) -> SymEigenDecomposition:
    """Eigendecomposition A = Q·diag(λ)·Qᵀ by cyclic Jacobi rotations.

    Each sweep annihilates every off-diagonal pair (p, q) once in row order. Rotations
    are applied to the working copy and accumulated into Q.

    Args:
        matrix: Symmetric input
        max_sweeps: Sweep cap (default 100·dim)

    Returns:
        Ascending eigenvalues and matching orthonormal eigenvector columns

    Raises:
        ConvergenceError: If the off-diagonal mass does not vanish within the cap
    """
    a = matrix.to_array()
    n = matrix.dim
    q = np.eye(n)
    cap = max_sweeps if max_sweeps is not None else 100 * n
    scale = float(np.sqrt(np.sum(a * a)))

    sweeps = 0
    while _off_diagonal_norm(a) > OFF_DIAGONAL_TOLERANCE * scale:
        if sweeps >= cap:
            raise ConvergenceError("sym_eigen", sweeps, compute_matrix_hash(matrix))
        sweeps += 1

        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if apr == 0.0:
                    continue

                theta = (a[r, r] - a[p, p]) / (2.0 * apr)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rotation = np.array([[c, s], [-s, c]])

                idx = [p, r]
                a[:, idx] = a[:, idx] @ rotation
                a[idx, :] = rotation.T @ a[idx, :]
                a[p, r] = a[r, p] = 0.0
                q[:, idx] = q[:, idx] @ rotation

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    logger.debug(f"sym_eigen converged in {sweeps} sweeps (dim={n})")

    return SymEigenDecomposition(eigenvalues=eigenvalues[order], eigenvectors=q[:, order], sweeps=sweeps)
