"""Stationary iteration x ← x + M⁻¹(b - Ax) and its contraction criterion."""

from .contractivity import contractivity_report
from .iteration import chebyshev_iterate, stationary_iterate

__all__ = ["contractivity_report", "stationary_iterate", "chebyshev_iterate"]
