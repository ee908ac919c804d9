"""Invoke tasks for the inertia-diagnostics project."""

from invoke import task

SOURCES = "src/ tests/ tasks.py"


@task
def test(c, verbose=False, coverage=True, keyword=None):
    """Run all tests.

    Args:
        verbose: Show verbose output
        coverage: Collect coverage (configured in pyproject addopts)
        keyword: Only run tests matching this -k expression
    """
    cmd = "pytest"
    if verbose:
        cmd += " -v"
    if not coverage:
        cmd += " --no-cov"
    if keyword:
        cmd += f" -k '{keyword}'"
    c.run(cmd)


@task
def test_unit(c, verbose=False):
    """Run unit tests only."""
    c.run("pytest tests/unit --no-cov" + (" -v" if verbose else ""))


@task
def test_integration(c, verbose=False):
    """Run the CLI and seeded property suites."""
    c.run("pytest tests/integration --no-cov" + (" -v" if verbose else ""))


@task
def format(c, check=False):
    """Format code with black."""
    c.run(f"black {SOURCES}" + (" --check" if check else ""))


@task
def lint(c, fix=False):
    """Lint code with ruff."""
    c.run(f"ruff check {SOURCES}" + (" --fix" if fix else ""))


@task
def typecheck(c):
    """Run type checking with mypy."""
    c.run("mypy src/")


@task
def quality(c, fix=False):
    """Run formatter, linter and type checker."""
    print("🎨 Running formatter...")
    format(c, check=not fix)

    print("\n🔍 Running linter...")
    lint(c, fix=fix)

    print("\n📊 Running type checker...")
    typecheck(c)

    print("\n✅ All quality checks complete!")


@task
def example(c, tolerance=1e-3, steps=512):
    """Recompute the worked 5x5 example and fail on any mismatch."""
    c.run(f"inertiadiag example --check --tolerance {tolerance} --steps {steps}")


@task
def trace_example(c, out="example_trace.csv", kind="T", steps=512):
    """Write the worked example pair and its eigenvalue curves to the working directory."""
    c.run("inertiadiag example --save . --steps 64", hide="out")
    c.run(f"inertiadiag trace example_A.mtx example_M.mtx --kind {kind} --steps {steps} -o {out}")


@task
def sweep(c, dims="2..6", count=100, seed=42, workers=4, mismatch_only=False):
    """Run the seeded property sweep; fails if any violation is found."""
    cmd = f"inertiadiag sweep --dims {dims} --count {count} --seed {seed} --workers {workers}"
    if mismatch_only:
        cmd += " --mismatch-only"
    c.run(cmd)


@task
def clean(c):
    """Remove build artifacts, caches and generated example files."""
    for pattern in (
        "build/",
        "dist/",
        "*.egg-info",
        "**/__pycache__",
        ".pytest_cache/",
        ".coverage",
        "htmlcov/",
        ".mypy_cache/",
        ".ruff_cache/",
        "example_A.mtx",
        "example_M.mtx",
        "example_trace.csv",
    ):
        c.run(f"rm -rf {pattern}", warn=True)

    print("✅ Cleaned build artifacts and cache files")


@task(pre=[quality, test])
def ci(c):
    """Run all CI checks (quality + tests), then the worked-example check."""
    example(c)
    print("\n✅ All CI checks passed!")
