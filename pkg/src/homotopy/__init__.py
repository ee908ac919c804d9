"""Homotopies T(θ) = (1-θ)A + θM and S(θ) = (1-θ)A - θM."""

from .counting import count_report
from .tracer import crossing_eigenvalue, homotopy_matrix, locate_crossings, trace

__all__ = [
    "trace",
    "locate_crossings",
    "homotopy_matrix",
    "crossing_eigenvalue",
    "count_report",
]
