"""Inertia, pencil and splitting diagnostics for symmetric matrix pairs."""

__version__ = "0.1.0"
