"""Spatial sign function and the spatial (geometric, L2) median.

The spatial median of points x_1..x_n is the point minimizing
f(y) = sum_i ||y - x_i||. It is computed by a damped Weiszfeld fixed-point
iteration that stays monotone in f even when an iterate lands exactly on a
data point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import check_data_matrix

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 1000


@dataclass(frozen=True)
class MedianResult:
    """Outcome of a spatial-median solve."""

    median: np.ndarray
    objective: float
    iterations: int
    converged: bool


def univariate_median(values) -> float:
    """Sample median of a 1-D sample.

    Even n uses the midpoint of the two central order statistics.
    """
    values = np.asarray(values, dtype=float).ravel()
    if values.size == 0:
        raise ValueError("empty sample")
    if not np.isfinite(values).all():
        raise ValueError("sample contains NaN or infinite entries")
    return float(np.median(values))


def spatial_sign(x, anchor) -> np.ndarray:
    """Unit vector pointing from ``anchor`` toward ``x``; zero if they coincide."""
    x = np.asarray(x, dtype=float).ravel()
    anchor = np.asarray(anchor, dtype=float).ravel()
    if x.shape != anchor.shape:
        raise ValueError(
            f"dimension mismatch: {x.shape[0]} vs {anchor.shape[0]}"
        )
    diff = x - anchor
    norm = np.linalg.norm(diff)
    if norm == 0.0:
        return np.zeros_like(diff)
    return diff / norm


def distance_sum(y, X) -> float:
    """Objective f(y) = sum of Euclidean distances from y to the rows of X."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(np.linalg.norm(X - y, axis=1).sum())


def spatial_median(
    data,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    init=None,
    check_descent: bool = False,
) -> MedianResult:
    """Minimize the sum of Euclidean distances via damped Weiszfeld iteration.

    When the iterate coincides with a data point of multiplicity m, the update
    is damped so the objective still decreases; if the residual sign-sum norm
    is at most m the point is already the minimizer and the iteration stops.

    Parameters
    ----------
    data : array-like, shape (n, d)
    tol : relative step tolerance ||y_next - y|| / (1 + ||y||)
    max_iter : iteration cap; exceeding it yields converged=False
    init : optional warm-start point (defaults to the coordinate-wise median)
    check_descent : assert the objective is non-increasing at every step
    """
    X = check_data_matrix(data, name="data")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    n, d = X.shape
    if n == 1:
        return MedianResult(X[0].copy(), 0.0, 0, True)

    y = np.median(X, axis=0) if init is None else np.asarray(init, dtype=float).copy()
    if y.shape != (d,):
        raise ValueError("init has wrong dimension")

    scale = max(1.0, float(np.abs(X).max()))
    coincide_tol = 1e-14 * scale
    f_prev = distance_sum(y, X) if check_descent else None

    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        diff = X - y
        dist = np.sqrt(np.einsum("ij,ij->i", diff, diff))
        off = dist > coincide_tol
        multiplicity = int(n - off.sum())
        if multiplicity == n:
            # every data point coincides with the iterate
            converged = True
            break

        if multiplicity == 0:
            w = 1.0 / dist
            attracted = (w @ X) / w.sum()
            y_next = attracted
        else:
            w = np.where(off, 1.0, 0.0) / np.where(off, dist, 1.0)
            attracted = (w @ X) / w.sum()
            resid = w @ diff
            resid_norm = float(np.sqrt(resid @ resid))
            if resid_norm <= multiplicity:
                # sitting on a data point that is the minimizer
                converged = True
                break
            damp = multiplicity / resid_norm
            y_next = (1.0 - damp) * attracted + damp * y

        if check_descent:
            f_next = distance_sum(y_next, X)
            assert f_next <= f_prev + 1e-10 * (1.0 + abs(f_prev)), (
                f"objective increased: {f_prev} -> {f_next}"
            )
            f_prev = f_next

        delta = y_next - y
        step = np.sqrt(delta @ delta) / (1.0 + np.sqrt(y @ y))
        y = y_next
        if step < tol:
            converged = True
            break

    # Weiszfeld converges sublinearly when the minimizer is a data point, so
    # the step criterion can stop short of it. If the nearest data point
    # satisfies the minimizer condition and does not increase the objective,
    # return it instead of the stalled iterate.
    diff = X - y
    dist = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    p = X[int(np.argmin(dist))]
    pdiff = X - p
    pdist = np.sqrt(np.einsum("ij,ij->i", pdiff, pdiff))
    off = pdist > coincide_tol
    p_mult = int(n - off.sum())
    if p_mult > 0:
        w = np.where(off, 1.0, 0.0) / np.where(off, pdist, 1.0)
        resid = w @ pdiff
        if float(np.sqrt(resid @ resid)) <= p_mult:
            f_y = distance_sum(y, X)
            f_p = distance_sum(p, X)
            if f_p <= f_y:
                return MedianResult(p.copy(), f_p, iterations, converged)

    return MedianResult(y, distance_sum(y, X), iterations, converged)
