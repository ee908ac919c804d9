"""Seeded random symmetric matrices with prescribed inertia."""

import logging
from typing import Tuple

import numpy as np
import numpy.typing as npt

from ..kernel.errors import ParameterError
from ..kernel.jacobi import sym_eigen
from ..kernel.ldlt import ldlt_inertia
from ..models.matrix import DenseMatrix, SymmetricMatrix
from ..models.spectrum import Inertia
from .errors import GeneratorError

logger = logging.getLogger(__name__)

# Eigenvalue magnitudes are drawn from this range
MAGNITUDE_RANGE = (0.1, 1.0)

# Full-rank blocks are redrawn while the smallest singular value is below this
MIN_SINGULAR_VALUE = 1e-3
MAX_ATTEMPTS = 100

INERTIA_MODES = ("any", "matched", "mismatched")


def case_rng(seed: int, dim: int, index: int) -> np.random.Generator:
    """Independent generator for case ``index`` of dimension ``dim`` in a seeded suite."""
    return np.random.default_rng(np.random.SeedSequence([seed, dim, index]))


def _child_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**63 - 1))


def random_orthogonal(dim: int, rng: np.random.Generator) -> npt.NDArray[np.float64]:
    """Product of ``dim`` Householder reflectors built from Gaussian vectors."""
    q = np.eye(dim)
    for _ in range(dim):
        v = rng.standard_normal(dim)
        v /= np.sqrt(v @ v)
        q -= 2.0 * np.outer(q @ v, v)
    return q


def random_sym_with_inertia(p: int, n_neg: int, seed: int) -> SymmetricMatrix:
    """Q·D·Qᵀ with ``p`` eigenvalues in [0.1, 1] and ``n_neg`` in [-1, -0.1].

    Raises:
        ParameterError: If p + n_neg < 1 or either count is negative
        GeneratorError: If the factorization disagrees with the constructed inertia
    """
    if p < 0 or n_neg < 0 or p + n_neg < 1:
        raise ParameterError(f"need p, n_neg >= 0 and p + n_neg >= 1, got ({p}, {n_neg})")

    rng = np.random.default_rng(seed)
    dim = p + n_neg
    q = random_orthogonal(dim, rng)
    low, high = MAGNITUDE_RANGE
    diagonal = np.concatenate([rng.uniform(low, high, p), -rng.uniform(low, high, n_neg)])

    matrix = SymmetricMatrix.from_array((q * diagonal) @ q.T, symmetrize=True)
    _, inertia = ldlt_inertia(matrix)
    if inertia != Inertia(pos=p, zero=0, neg=n_neg):
        raise GeneratorError(f"generated inertia {inertia} differs from requested ({p}, 0, {n_neg}) for seed {seed}")
    return matrix


def random_spd(dim: int, seed: int) -> SymmetricMatrix:
    """Symmetric positive definite matrix with eigenvalues in [0.1, 1]."""
    return random_sym_with_inertia(dim, 0, seed)


def random_full_rank(rows: int, cols: int, seed: int) -> DenseMatrix:
    """Gaussian rows×cols block (rows <= cols) with smallest singular value >= 1e-3.

    Raises:
        ParameterError: If rows > cols or either is < 1
        GeneratorError: If no acceptable draw is found within MAX_ATTEMPTS
    """
    if rows < 1 or cols < 1 or rows > cols:
        raise ParameterError(f"need 1 <= rows <= cols, got {rows}x{cols}")

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_ATTEMPTS):
        block = rng.standard_normal((rows, cols))
        gram = SymmetricMatrix.from_array(block @ block.T, symmetrize=True)
        smallest = float(sym_eigen(gram).eigenvalues[0])
        if smallest >= MIN_SINGULAR_VALUE**2:
            return DenseMatrix(block)
        logger.debug(f"Rejected rank-deficient draw {attempt} (sigma_min^2={smallest:.3e})")
    raise GeneratorError(f"no full-rank {rows}x{cols} block after {MAX_ATTEMPTS} draws (seed {seed})")


def random_pair(
    dim: int, seed: int, inertia: str = "any", index: int = 0
) -> Tuple[SymmetricMatrix, SymmetricMatrix]:
    """Random invertible symmetric (A, M) for case ``index`` of a seeded suite.

    Args:
        dim: Matrix dimension (>= 1)
        seed: Suite seed
        inertia: "any", "matched" (same inertia) or "mismatched" (different inertia)
        index: Case index within the suite

    Returns:
        (A, M)

    Raises:
        ParameterError: On an unknown mode, or "mismatched" with dim < 1
    """
    if inertia not in INERTIA_MODES:
        raise ParameterError(f"inertia mode must be one of {INERTIA_MODES}, got {inertia!r}")
    if dim < 1:
        raise ParameterError(f"dim must be >= 1, got {dim}")

    rng = case_rng(seed, dim, index)
    p_a = int(rng.integers(0, dim + 1))
    if inertia == "matched":
        p_m = p_a
    elif inertia == "mismatched":
        choices = [p for p in range(dim + 1) if p != p_a]
        p_m = int(choices[int(rng.integers(0, len(choices)))])
    else:
        p_m = int(rng.integers(0, dim + 1))

    a = random_sym_with_inertia(p_a, dim - p_a, _child_seed(rng))
    m = random_sym_with_inertia(p_m, dim - p_m, _child_seed(rng))
    return a, m
