"""Result types for the pencil A - λM (spectrum of M⁻¹A)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .matrix import SymmetricMatrix
from .spectrum import GeneralSpectrum, Inertia


@dataclass(frozen=True)
class PencilClassification:
    """Spectrum of M⁻¹A split into negative-real, positive-real and complex parts.

    ``complex_pairs`` keeps one representative (im > 0) per conjugate pair.
    """

    spectrum: GeneralSpectrum
    negative_real: Tuple[float, ...]
    positive_real: Tuple[float, ...]
    complex_pairs: Tuple[complex, ...]
    real_tolerance: float

    @property
    def dim(self) -> int:
        return self.spectrum.dim

    @property
    def negative_count(self) -> int:
        return len(self.negative_real)

    @property
    def positive_count(self) -> int:
        return len(self.positive_real)

    @property
    def eigenvalues(self) -> Tuple[complex, ...]:
        return self.spectrum.eigenvalues

    @property
    def is_real(self) -> bool:
        return not self.complex_pairs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "negativeReal": list(self.negative_real),
            "positiveReal": list(self.positive_real),
            "complexPairs": [{"re": z.real, "im": z.imag} for z in self.complex_pairs],
            "realTolerance": self.real_tolerance,
        }


@dataclass(frozen=True)
class LemmaVerdict:
    """Whether differing inertia came with a negative real pencil eigenvalue.

    Only the forward implication is checked: equal inertia does not rule out
    negative eigenvalues (A = diag(1, -1), M = -A).
    """

    inertia_a: Inertia
    inertia_m: Inertia
    inertia_differs: bool
    has_negative_real: bool

    @property
    def lemma_consistent(self) -> bool:
        return (not self.inertia_differs) or self.has_negative_real

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inertiaA": self.inertia_a.to_dict(),
            "inertiaM": self.inertia_m.to_dict(),
            "inertiaDiffers": self.inertia_differs,
            "hasNegativeReal": self.has_negative_real,
            "lemmaConsistent": self.lemma_consistent,
        }


@dataclass(frozen=True)
class SimilarityCheck:
    """C = M^{-1/2}·A·M^{-1/2} for SPD M.

    Holds when C is symmetric, the pencil spectrum is real, inertia(C) = inertia(A)
    and the sign counts of the pencil spectrum equal inertia(A).
    """

    congruent: SymmetricMatrix
    congruent_eigenvalues: npt.NDArray[np.float64]
    inertia_a: Inertia
    inertia_congruent: Inertia
    pencil: PencilClassification
    congruent_symmetric: bool
    spectrum_real: bool
    inertia_preserved: bool
    signature_matches: bool

    @property
    def all_hold(self) -> bool:
        return self.congruent_symmetric and self.spectrum_real and self.inertia_preserved and self.signature_matches


@dataclass(frozen=True)
class DefiniteRealityCheck:
    """Pencil spectrum reality when one of A, M is definite."""

    definite_matrix: Optional[str]
    pencil: PencilClassification

    @property
    def reality_guaranteed(self) -> bool:
        return self.definite_matrix is not None

    @property
    def spectrum_real(self) -> bool:
        return self.pencil.is_real

    @property
    def consistent(self) -> bool:
        return (not self.reality_guaranteed) or self.spectrum_real
