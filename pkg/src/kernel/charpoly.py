"""Independent eigenvalue oracle: characteristic polynomial + simultaneous root finding.

Used only to cross-check ``general_eigen``. Faddeev-LeVerrier builds the monic
characteristic polynomial from traces of matrix powers; Durand-Kerner refines all
roots at once from points spread on a circle of Cauchy-bound radius.
"""

import cmath
import logging
import math
from typing import List

import numpy as np

from ..models.matrix import DenseMatrix
from ..models.spectrum import GeneralSpectrum, sort_spectrum
from ..utils.hash import compute_matrix_hash
from .errors import ConvergenceError, ParameterError

logger = logging.getLogger(__name__)

ORACLE_MAX_DIM = 8
DURAND_KERNER_MAX_ITER = 500
DURAND_KERNER_TOLERANCE = 1e-12


def characteristic_polynomial(matrix: DenseMatrix) -> List[float]:
    """Coefficients c[0..n] of det(λI - G) = Σ c[i]·λ^i, with c[n] = 1."""
    g = matrix.data
    n = matrix.rows
    coefficients = [0.0] * (n + 1)
    coefficients[n] = 1.0

    power = np.zeros((n, n))
    identity = np.eye(n)
    for k in range(1, n + 1):
        power = g @ power + coefficients[n - k + 1] * identity
        coefficients[n - k] = -float(np.trace(g @ power)) / k
    return coefficients


def _evaluate(coefficients: List[float], z: complex) -> complex:
    value = complex(0.0, 0.0)
    for c in reversed(coefficients):
        value = value * z + c
    return value


def durand_kerner(coefficients: List[float], matrix_hash: str = "-") -> List[complex]:
    """All roots of a monic polynomial given by ascending coefficients."""
    n = len(coefficients) - 1
    if n == 0:
        return []
    radius = 1.0 + max(abs(c) for c in coefficients[:-1])
    roots = [radius * cmath.exp(1j * (2.0 * math.pi * k / n + 0.4)) for k in range(n)]

    for iteration in range(1, DURAND_KERNER_MAX_ITER + 1):
        largest_step = 0.0
        for i in range(n):
            denominator = complex(1.0, 0.0)
            for j in range(n):
                if j != i:
                    denominator *= roots[i] - roots[j]
            step = _evaluate(coefficients, roots[i]) / denominator
            roots[i] -= step
            largest_step = max(largest_step, abs(step))

        scale = 1.0 + max(abs(z) for z in roots)
        if largest_step <= DURAND_KERNER_TOLERANCE * scale:
            logger.debug(f"Durand-Kerner converged in {iteration} iterations (degree {n})")
            return roots

    raise ConvergenceError("charpoly_eigen_oracle", DURAND_KERNER_MAX_ITER, matrix_hash)


def _clean_conjugates(roots: List[complex], real_tolerance: float) -> List[complex]:
    """Snap near-real roots to the axis and make complex roots exact conjugate pairs."""
    real = [complex(z.real, 0.0) for z in roots if abs(z.imag) <= real_tolerance * (1.0 + abs(z))]
    upper = [z for z in roots if z.imag > real_tolerance * (1.0 + abs(z))]
    lower = [z for z in roots if z.imag < -real_tolerance * (1.0 + abs(z))]

    cleaned = list(real)
    for z in upper:
        if not lower:
            cleaned.append(z)
            continue
        partner = min(lower, key=lambda w: abs(w - z.conjugate()))
        lower.remove(partner)
        re = 0.5 * (z.real + partner.real)
        im = 0.5 * (z.imag - partner.imag)
        cleaned.extend([complex(re, im), complex(re, -im)])
    cleaned.extend(lower)
    return cleaned


def charpoly_eigen_oracle(matrix: DenseMatrix, real_tolerance: float = 1e-8) -> GeneralSpectrum:
    """Eigenvalues of a small square matrix from its characteristic polynomial.

    Raises:
        ParameterError: If the matrix is not square or larger than 8×8
        ConvergenceError: If the root finder does not converge
    """
    if not matrix.is_square:
        raise ParameterError(f"oracle needs a square matrix, got {matrix.rows}x{matrix.cols}")
    if matrix.rows > ORACLE_MAX_DIM:
        raise ParameterError(f"oracle is limited to dim <= {ORACLE_MAX_DIM}, got {matrix.rows}")

    coefficients = characteristic_polynomial(matrix)
    roots = durand_kerner(coefficients, compute_matrix_hash(matrix))
    return GeneralSpectrum(eigenvalues=sort_spectrum(_clean_conjugates(roots, 1e-10)), real_tolerance=real_tolerance)
