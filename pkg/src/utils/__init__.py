"""Utility modules for inertia diagnostics."""

from .export import export_to_json, export_trajectory_csv, to_json
from .hash import compute_matrix_hash
from .logging import setup_logging
from .matrix_market import MatrixMarketError, read_matrix_market, write_matrix_market

__all__ = [
    "setup_logging",
    "compute_matrix_hash",
    "export_to_json",
    "export_trajectory_csv",
    "to_json",
    "MatrixMarketError",
    "read_matrix_market",
    "write_matrix_market",
]
