"""Command-line interface for inertia diagnostics."""

from .main import app, cli_main

__all__ = ["app", "cli_main"]
