"""Stationary and Chebyshev iterations preconditioned by M."""

import logging
import math
from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt

from ..kernel.errors import ParameterError, SingularMatrixError
from ..kernel.ldlt import ldlt_inertia, ldlt_solve
from ..models.matrix import SymmetricMatrix
from ..models.splitting import STOP_CONVERGED, STOP_DIVERGED, STOP_MAX_ITER, IterationTrace
from ..pencil.chebyshev import validate_interval
from ..pencil.spectrum import check_same_dim

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 50

# Residual thresholds relative to 1 + ‖b‖∞
CONVERGENCE_TOLERANCE = 1e-12
DIVERGENCE_GUARD = 1e12


def _prepare(
    a: SymmetricMatrix, m: SymmetricMatrix, b: npt.ArrayLike, x0: Optional[npt.ArrayLike], max_iter: int
) -> Tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    check_same_dim(a, m)
    if max_iter < 1:
        raise ParameterError(f"max_iter must be >= 1, got {max_iter}")
    rhs = np.asarray(b, dtype=np.float64)
    if rhs.shape != (a.dim,):
        raise ParameterError(f"right-hand side must have shape ({a.dim},), got {rhs.shape}")
    x = np.zeros(a.dim) if x0 is None else np.array(x0, dtype=np.float64)
    if x.shape != (a.dim,):
        raise ParameterError(f"initial guess must have shape ({a.dim},), got {x.shape}")
    return rhs, x


def _status(norm: float, scale: float) -> Optional[str]:
    if norm < CONVERGENCE_TOLERANCE * scale:
        return STOP_CONVERGED
    if not math.isfinite(norm) or norm > DIVERGENCE_GUARD * scale:
        return STOP_DIVERGED
    return None


def stationary_iterate(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    b: npt.ArrayLike,
    x0: Optional[npt.ArrayLike] = None,
    max_iter: int = DEFAULT_MAX_ITER,
    keep_iterates: bool = False,
) -> IterationTrace:
    """Run x_{k+1} = x_k + M⁻¹(b - A·x_k), the residual-correction form of M·x_{k+1} = N·x_k + b.

    Stops once ‖b - A·x_k‖∞ drops below 1e-12·(1 + ‖b‖∞) or exceeds 1e12·(1 + ‖b‖∞).

    Args:
        a: Symmetric A
        m: Symmetric invertible M (factored once)
        b: Right-hand side
        x0: Initial guess (default zero)
        max_iter: Iteration cap (>= 1)
        keep_iterates: Record every x_k on the trace

    Returns:
        IterationTrace with residual_norms[k] = ‖b - A·x_k‖∞

    Raises:
        SingularMatrixError: If M is singular
        ParameterError: On shape mismatch or max_iter < 1
    """
    rhs, x = _prepare(a, m, b, x0, max_iter)
    factorization, inertia_m = ldlt_inertia(m)
    if not inertia_m.is_invertible:
        raise SingularMatrixError("M is singular", inertia=inertia_m)

    scale = 1.0 + float(np.max(np.abs(rhs)))
    residual = rhs - a.data @ x
    trace = IterationTrace(residual_norms=[float(np.max(np.abs(residual)))])
    if keep_iterates:
        trace.iterates = [x.copy()]

    status = _status(trace.residual_norms[0], scale)
    while status is None and trace.iterations < max_iter:
        x = x + ldlt_solve(factorization, residual)
        residual = rhs - a.data @ x
        trace.residual_norms.append(float(np.max(np.abs(residual))))
        if trace.iterates is not None:
            trace.iterates.append(x.copy())
        status = _status(trace.residual_norms[-1], scale)

    trace.stop_reason = status or STOP_MAX_ITER
    trace.solution = x
    logger.debug(
        f"stationary iteration stopped ({trace.stop_reason}) after {trace.iterations} steps, "
        f"residual {trace.final_residual:.3e}"
    )
    return trace


def chebyshev_iterate(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    b: npt.ArrayLike,
    interval: Tuple[float, float],
    x0: Optional[npt.ArrayLike] = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> IterationTrace:
    """Chebyshev semi-iteration for A·x = b preconditioned by M, tuned to ``interval``.

    The k-th residual is p_k(AM⁻¹) applied to the initial residual, with p_k the
    normalized Chebyshev polynomial of ``chebyshev_value``. Eigenvalues of M⁻¹A outside
    [a, b] (negative ones in particular) are amplified rather than damped.

    Args:
        a: Symmetric A
        m: Symmetric invertible M
        b: Right-hand side
        interval: (a, b) with 0 < a < b, the assumed eigenvalue range of M⁻¹A
        x0: Initial guess (default zero)
        max_iter: Iteration cap (>= 1)

    Returns:
        IterationTrace with the same stopping rules as stationary_iterate

    Raises:
        ParameterError: On an invalid interval or shapes
        SingularMatrixError: If M is singular
    """
    low, high = interval
    validate_interval(low, high)
    rhs, x = _prepare(a, m, b, x0, max_iter)
    factorization, inertia_m = ldlt_inertia(m)
    if not inertia_m.is_invertible:
        raise SingularMatrixError("M is singular", inertia=inertia_m)

    center = 0.5 * (high + low)
    half_width = 0.5 * (high - low)
    scale = 1.0 + float(np.max(np.abs(rhs)))

    residual = rhs - a.data @ x
    trace = IterationTrace(residual_norms=[float(np.max(np.abs(residual)))])
    status = _status(trace.residual_norms[0], scale)

    alpha = 0.0
    direction = np.zeros_like(x)
    while status is None and trace.iterations < max_iter:
        k = trace.iterations
        z = ldlt_solve(factorization, residual)
        if k == 0:
            direction = z.copy()
            alpha = 1.0 / center
        else:
            beta = 0.5 * (half_width * alpha) ** 2
            if k > 1:
                beta *= 0.5
            alpha = 1.0 / (center - beta / alpha)
            direction = z + beta * direction

        x = x + alpha * direction
        residual = residual - alpha * (a.data @ direction)
        trace.residual_norms.append(float(np.max(np.abs(residual))))
        status = _status(trace.residual_norms[-1], scale)

    trace.stop_reason = status or STOP_MAX_ITER
    trace.solution = x
    logger.debug(
        f"Chebyshev iteration on [{low}, {high}] stopped ({trace.stop_reason}) after {trace.iterations} steps"
    )
    return trace
