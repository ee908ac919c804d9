"""Test suite for inertia-diagnostics."""
