"""Spectrum of the pencil A - λM, computed as the eigenvalues of M⁻¹A."""

import logging
from typing import List, Optional

from ..kernel.errors import KernelError, ParameterError, SingularMatrixError
from ..kernel.hqr import general_eigen
from ..kernel.ldlt import ldlt_inertia, ldlt_solve
from ..models.matrix import DenseMatrix, SymmetricMatrix
from ..models.pencil import LemmaVerdict, PencilClassification
from ..models.spectrum import GeneralSpectrum, Inertia

logger = logging.getLogger(__name__)

DEFAULT_REAL_TOLERANCE = 1e-8

# A real pencil eigenvalue this close to zero means A itself is singular
SINGULAR_EIGENVALUE_TOLERANCE = 1e-10

# Relative mismatch allowed between an eigenvalue and its conjugate partner
CONJUGATE_TOLERANCE = 1e-8


def check_same_dim(a: SymmetricMatrix, m: SymmetricMatrix) -> None:
    if a.dim != m.dim:
        raise ParameterError(f"dimension mismatch: A is {a.dim}x{a.dim}, M is {m.dim}x{m.dim}")


def require_invertible(matrix: SymmetricMatrix, name: str, zero_tolerance: Optional[float] = None) -> Inertia:
    """Inertia of ``matrix``, raising SingularMatrixError if it has a zero count."""
    _, inertia = ldlt_inertia(matrix, zero_tolerance)
    if not inertia.is_invertible:
        raise SingularMatrixError(f"{name} is singular", inertia=inertia)
    return inertia


def classify_spectrum(spectrum: GeneralSpectrum) -> PencilClassification:
    """Split a real-matrix spectrum into negative-real, positive-real and conjugate pairs.

    Raises:
        SingularMatrixError: If a real eigenvalue is numerically zero
        KernelError: If a complex eigenvalue has no conjugate partner
    """
    negative: List[float] = []
    positive: List[float] = []
    upper: List[complex] = []
    lower: List[complex] = []

    for value in spectrum.eigenvalues:
        if spectrum.is_real(value):
            if abs(value.real) <= SINGULAR_EIGENVALUE_TOLERANCE:
                raise SingularMatrixError(f"A numerically singular: pencil eigenvalue {value.real:.3e}")
            (negative if value.real < 0.0 else positive).append(value.real)
        elif value.imag > 0.0:
            upper.append(value)
        else:
            lower.append(value)

    if len(upper) != len(lower):
        raise KernelError(f"unpaired complex eigenvalues: {len(upper)} with im > 0, {len(lower)} with im < 0")

    pairs: List[complex] = []
    remaining = list(lower)
    for value in upper:
        partner = min(remaining, key=lambda w: abs(w - value.conjugate()))
        if abs(partner - value.conjugate()) > CONJUGATE_TOLERANCE * (1.0 + abs(value)):
            raise KernelError(f"eigenvalue {value} has no conjugate partner (closest {partner})")
        remaining.remove(partner)
        # Average the pair so the representative is exactly self-conjugate
        pairs.append(complex(0.5 * (value.real + partner.real), 0.5 * (value.imag - partner.imag)))

    return PencilClassification(
        spectrum=spectrum,
        negative_real=tuple(sorted(negative)),
        positive_real=tuple(sorted(positive)),
        complex_pairs=tuple(sorted(pairs, key=lambda z: (z.real, z.imag))),
        real_tolerance=spectrum.real_tolerance,
    )


def pencil_spectrum(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> PencilClassification:
    """Classify the eigenvalues of M⁻¹A.

    M is factored once and M⁻¹A is formed by solving against all columns of A.

    Args:
        a: Symmetric A
        m: Symmetric invertible M of the same dimension
        real_tolerance: |im| <= real_tolerance·(1+|λ|) counts as real
        zero_tolerance: Inertia zero tolerance for M (default scale-relative)

    Returns:
        PencilClassification of M⁻¹A

    Raises:
        SingularMatrixError: If M is singular, or A is numerically singular
        ParameterError: On dimension mismatch
    """
    check_same_dim(a, m)
    factorization, inertia_m = ldlt_inertia(m, zero_tolerance)
    if not inertia_m.is_invertible:
        raise SingularMatrixError("M is singular", inertia=inertia_m)

    product = ldlt_solve(factorization, a.data)
    spectrum = general_eigen(DenseMatrix(product), real_tolerance=real_tolerance)
    classification = classify_spectrum(spectrum)

    logger.debug(
        f"pencil spectrum (dim={a.dim}): {classification.negative_count} negative real, "
        f"{classification.positive_count} positive real, {len(classification.complex_pairs)} complex pairs"
    )
    return classification


def verify_lemma(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> LemmaVerdict:
    """Check that differing inertia forces a negative real eigenvalue of M⁻¹A."""
    check_same_dim(a, m)
    inertia_a = require_invertible(a, "A", zero_tolerance)
    inertia_m = require_invertible(m, "M", zero_tolerance)
    classification = pencil_spectrum(a, m, real_tolerance, zero_tolerance)

    verdict = LemmaVerdict(
        inertia_a=inertia_a,
        inertia_m=inertia_m,
        inertia_differs=inertia_a != inertia_m,
        has_negative_real=classification.negative_count > 0,
    )
    if not verdict.lemma_consistent:
        logger.warning(f"Inertia {inertia_a} vs {inertia_m} differs but no negative real pencil eigenvalue found")
    return verdict
