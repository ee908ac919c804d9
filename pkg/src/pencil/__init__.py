"""Spectrum of the pencil A - λM and the checks built on it."""

from .chebyshev import chebyshev_value
from .similarity import definite_reality_check, spd_similarity_check
from .spectrum import classify_spectrum, pencil_spectrum, require_invertible, verify_lemma

__all__ = [
    "pencil_spectrum",
    "classify_spectrum",
    "require_invertible",
    "verify_lemma",
    "spd_similarity_check",
    "definite_reality_check",
    "chebyshev_value",
]
