"""Shifted and scaled Chebyshev residual polynomials."""

import math

from ..kernel.errors import ParameterError


def validate_interval(low: float, high: float) -> None:
    if not (math.isfinite(low) and math.isfinite(high)) or low <= 0.0 or high <= low:
        raise ParameterError(f"Chebyshev interval must satisfy 0 < a < b, got [{low}, {high}]")


def chebyshev_value(low: float, high: float, degree: int, lam: float) -> float:
    """p_k(λ) = T_k((a+b-2λ)/(b-a)) / T_k((a+b)/(b-a)), so that p_k(0) = 1.

    The ratio is evaluated in exponential form to avoid overflowing T_k for large
    degree: outside [-1, 1], T_k(x) = sign(x)^k·cosh(k·acosh|x|).

    Args:
        low: Interval lower end a > 0
        high: Interval upper end b > a
        degree: Polynomial degree k >= 1
        lam: Evaluation point λ

    Returns:
        p_k(λ); +-inf if the value overflows a float

    Raises:
        ParameterError: On an invalid interval or degree
    """
    validate_interval(low, high)
    if degree < 1:
        raise ParameterError(f"Chebyshev degree must be >= 1, got {degree}")

    width = high - low
    x = (low + high - 2.0 * lam) / width
    c0 = math.acosh((low + high) / width)
    damping0 = 1.0 + math.exp(-2.0 * degree * c0)

    if abs(x) <= 1.0:
        return 2.0 * math.cos(degree * math.acos(x)) * math.exp(-degree * c0) / damping0

    c = math.acosh(abs(x))
    sign = -1.0 if (x < 0.0 and degree % 2 == 1) else 1.0
    exponent = degree * (c - c0)
    if exponent > 709.0:
        return sign * math.inf
    return sign * math.exp(exponent) * (1.0 + math.exp(-2.0 * degree * c)) / damping0
