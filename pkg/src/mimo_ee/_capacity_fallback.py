"""Pure-numpy fallback for the compiled capacity kernel.

Same contract as mimo_ee._capacity_kernel; used when the extension was not
built.
"""

from __future__ import annotations

import numpy as np

_LOG2E = 1.4426950408889634


def expected_log_capacity(nodes, weights, gamma: float) -> float:
    """Sum_i w_i * log2(1 + gamma * x_i) over the quadrature table."""
    return float(np.dot(weights, np.log1p(gamma * np.asarray(nodes)))) * _LOG2E


def bisect_rate(nodes, weights, target: float, lo: float, hi: float,
                tol: float, max_iter: int):
    """Bisect for gamma with expected_log_capacity(gamma) = target.

    Returns (gamma, residual, iterations). [lo, hi] must bracket the root of
    the (increasing) capacity-minus-target function.
    """
    mid = 0.5 * (lo + hi)
    c = expected_log_capacity(nodes, weights, mid)
    for it in range(max_iter):
        mid = 0.5 * (lo + hi)
        c = expected_log_capacity(nodes, weights, mid)
        if abs(c - target) <= tol or (hi - lo) <= 1e-15 * mid:
            return mid, c - target, it + 1
        if c < target:
            lo = mid
        else:
            hi = mid
    return mid, c - target, max_iter
