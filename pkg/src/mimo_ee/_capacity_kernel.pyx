# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: quadrature capacity sums and rate-to-SNR bisection.

Mirrors mimo_ee._capacity_fallback; the backend module picks whichever
imports successfully.
"""

from libc.math cimport fabs, log1p

cdef double LOG2E = 1.4426950408889634


cpdef double expected_log_capacity(double[::1] nodes, double[::1] weights,
                                   double gamma):
    """Sum_i w_i * log2(1 + gamma * x_i) over the quadrature table."""
    cdef Py_ssize_t i, n = nodes.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        acc += weights[i] * log1p(gamma * nodes[i])
    return acc * LOG2E


cpdef tuple bisect_rate(double[::1] nodes, double[::1] weights, double target,
                        double lo, double hi, double tol, int max_iter):
    """Bisect for gamma with expected_log_capacity(gamma) = target.

    Assumes the capacity is increasing in gamma and that [lo, hi] brackets the
    root. Returns (gamma, residual, iterations); convergence is residual-based
    with an interval-width backstop.
    """
    cdef double mid = 0.5 * (lo + hi)
    cdef double c = 0.0
    cdef int it
    for it in range(max_iter):
        mid = 0.5 * (lo + hi)
        c = expected_log_capacity(nodes, weights, mid)
        if fabs(c - target) <= tol or (hi - lo) <= 1e-15 * mid:
            return mid, c - target, it + 1
        if c < target:
            lo = mid
        else:
            hi = mid
    return mid, c - target, max_iter
