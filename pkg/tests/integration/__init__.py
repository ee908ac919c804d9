"""Integration tests for inertia-diagnostics."""
