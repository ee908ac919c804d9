"""Unit tests for inertia-diagnostics."""
