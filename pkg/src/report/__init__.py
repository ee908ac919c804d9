"""Report assembly and terminal rendering."""

from .builder import build_report, example_checks, parse_dims, run_sweep
from .formatter import ReportFormatter

__all__ = ["build_report", "run_sweep", "parse_dims", "example_checks", "ReportFormatter"]
