"""Nonsymmetric eigenvalues: Householder Hessenberg reduction + Francis double-shift QR.

The QR sweep follows the classic EISPACK ``hqr`` routine: implicit double shifts
keep the arithmetic real, converged 1×1 and 2×2 diagonal blocks of the real Schur
form are deflated from the bottom, and 2×2 blocks with a negative discriminant yield
a complex-conjugate pair. Exceptional shifts are taken every tenth iteration on a
stuck block.
"""

import logging
import math
from typing import List, Tuple

import numpy as np
import numpy.typing as npt

from ..models.matrix import DenseMatrix
from ..models.spectrum import GeneralSpectrum, sort_spectrum
from ..utils.hash import compute_matrix_hash
from .errors import ConvergenceError, ParameterError

logger = logging.getLogger(__name__)

EPS = float(np.finfo(np.float64).eps)

# QR iterations allowed per deflated eigenvalue
ITERATIONS_PER_EIGENVALUE = 60


def hessenberg(a: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Reduce a square matrix to upper Hessenberg form by Householder similarity."""
    h = np.array(a, dtype=np.float64)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            continue
        v = x.copy()
        v[0] += math.copysign(norm, x[0])
        v /= np.linalg.norm(v)
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v)
        h[k + 2 :, k] = 0.0
    return h


def _sign(a: float, b: float) -> float:
    return abs(a) if b >= 0.0 else -abs(a)


def _hqr(h: npt.NDArray[np.float64], matrix_hash: str) -> Tuple[List[complex], int]:
    """Eigenvalues of an upper Hessenberg matrix (1-based indexing internally)."""
    n = h.shape[0]
    a = [[0.0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            a[i + 1][j + 1] = float(h[i, j])

    wr = [0.0] * (n + 1)
    wi = [0.0] * (n + 1)

    anorm = 0.0
    for i in range(1, n + 1):
        for j in range(max(i - 1, 1), n + 1):
            anorm += abs(a[i][j])

    total = 0
    nn = n
    t = 0.0
    while nn >= 1:
        its = 0
        while True:
            # look for a single small subdiagonal element
            low = nn
            while low >= 2:
                s = abs(a[low - 1][low - 1]) + abs(a[low][low])
                if s == 0.0:
                    s = anorm
                if abs(a[low][low - 1]) <= EPS * s:
                    a[low][low - 1] = 0.0
                    break
                low -= 1
            if low < 1:
                low = 1

            x = a[nn][nn]
            if low == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break

            y = a[nn - 1][nn - 1]
            w = a[nn][nn - 1] * a[nn - 1][nn]
            if low == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + _sign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = wi[nn] = 0.0
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break

            if its >= ITERATIONS_PER_EIGENVALUE:
                raise ConvergenceError("general_eigen", total, matrix_hash)
            if its > 0 and its % 10 == 0:
                # exceptional shift
                t += x
                for i in range(1, nn + 1):
                    a[i][i] -= x
                s = abs(a[nn][nn - 1]) + abs(a[nn - 1][nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            total += 1

            # form shift and look for two consecutive small subdiagonal elements
            m = nn - 2
            while m >= low:
                z = a[m][m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1][m] + a[m][m + 1]
                q = a[m + 1][m + 1] - z - r - s
                r = a[m + 2][m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == low:
                    break
                u = abs(a[m][m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1][m - 1]) + abs(z) + abs(a[m + 1][m + 1]))
                if u <= EPS * v:
                    break
                m -= 1

            for i in range(m + 2, nn + 1):
                a[i][i - 2] = 0.0
                if i != m + 2:
                    a[i][i - 3] = 0.0

            # double QR step on rows low..nn and columns m..nn
            k = m
            while k <= nn - 1:
                if k != m:
                    p = a[k][k - 1]
                    q = a[k + 1][k - 1]
                    r = a[k + 2][k - 1] if k != nn - 1 else 0.0
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = _sign(math.sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if low != m:
                            a[k][k - 1] = -a[k][k - 1]
                    else:
                        a[k][k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    for j in range(k, nn + 1):
                        p = a[k][j] + q * a[k + 1][j]
                        if k != nn - 1:
                            p += r * a[k + 2][j]
                            a[k + 2][j] -= p * z
                        a[k + 1][j] -= p * y
                        a[k][j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    for i in range(low, mmin + 1):
                        p = x * a[i][k] + y * a[i][k + 1]
                        if k != nn - 1:
                            p += z * a[i][k + 2]
                            a[i][k + 2] -= p * r
                        a[i][k + 1] -= p * q
                        a[i][k] -= p
                k += 1

    return [complex(wr[i], wi[i]) for i in range(1, n + 1)], total


def general_eigen(matrix: DenseMatrix, real_tolerance: float = 1e-8) -> GeneralSpectrum:
    """All eigenvalues of a real square matrix via its real Schur form.

    Raises:
        ParameterError: If the matrix is not square
        ConvergenceError: If a block fails to deflate within the iteration cap
    """
    if not matrix.is_square:
        raise ParameterError(f"general_eigen needs a square matrix, got {matrix.rows}x{matrix.cols}")

    n = matrix.rows
    if n == 1:
        return GeneralSpectrum(eigenvalues=(complex(matrix.data[0, 0], 0.0),), real_tolerance=real_tolerance)

    h = hessenberg(matrix.data)
    values, iterations = _hqr(h, compute_matrix_hash(matrix))
    logger.debug(f"general_eigen dim={n} converged after {iterations} QR iterations")
    return GeneralSpectrum(eigenvalues=sort_spectrum(values), real_tolerance=real_tolerance, iterations=iterations)
