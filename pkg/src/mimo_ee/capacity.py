"""Ergodic capacity of the maximum-ratio-beamformed Rayleigh link.

The effective channel power ||h||^2 of an M-antenna beamformer with unit
variance complex Gaussian entries is Gamma(M, 1) distributed, so the capacity
is E[log2(1 + gamma * X)], X ~ Gamma(M, 1). The default evaluator folds the
Gamma weight into a generalized Gauss-Laguerre rule; a seeded Monte Carlo
estimator is available as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from mimo_ee import backend

_FLOAT_MAX = np.finfo(np.float64).max


class CapacityError(ValueError):
    """Invalid input to a capacity computation."""


class BracketError(RuntimeError):
    """Rate inversion could not bracket or converge; carries diagnostics."""


@dataclass(frozen=True)
class EstimatorConfig:
    """Evaluation settings for the capacity expectation.

    method : "quadrature" (deterministic, default) or "monte-carlo"
    quad_nodes : generalized Gauss-Laguerre node count
    mc_samples : Monte Carlo sample count
    seed : Monte Carlo seed; ignored by quadrature
    rate_tol : convergence tolerance of the rate inversion (bits/s/Hz)
    """

    method: str = "quadrature"
    quad_nodes: int = 128
    mc_samples: int = 1_000_000
    seed: int = 0
    rate_tol: float = 1e-6

    def __post_init__(self):
        if self.method not in ("quadrature", "monte-carlo"):
            raise CapacityError(f"unknown estimator method {self.method!r}")
        if self.quad_nodes < 2 or self.mc_samples < 2:
            raise CapacityError("node/sample counts must be >= 2")
        if self.rate_tol <= 0:
            raise CapacityError("rate_tol must be > 0")


DEFAULT_CONFIG = EstimatorConfig()


@dataclass(frozen=True)
class CapacityEstimate:
    value: float            # bits/s/Hz
    method: str             # "quadrature" or "monte-carlo"
    abs_error_bound: float  # bits/s/Hz


@dataclass(frozen=True)
class SnrSolution:
    gamma: float
    residual: float         # capacity(gamma) - R, bits/s/Hz
    iterations: int


@lru_cache(maxsize=1024)
def _quad_table(M: int, n: int):
    """Nodes and probability weights integrating against Gamma(M, 1).

    Golub-Welsch on the Jacobi matrix of the generalized Laguerre polynomials
    with parameter M - 1. The squared first eigenvector components are the
    weights already normalized to sum to one, which avoids the Gamma(M)
    overflow of textbook weight formulas at large M.
    """
    k = np.arange(n, dtype=np.float64)
    diag = 2.0 * k + M
    off = np.sqrt(k[1:] * (k[1:] + M - 1.0))
    nodes, vecs = eigh_tridiagonal(diag, off)
    weights = vecs[0] ** 2
    return np.ascontiguousarray(nodes), np.ascontiguousarray(weights)


def _validate_m_gamma(M: int, gamma: float) -> None:
    if not (isinstance(M, (int, np.integer)) and M >= 1):
        raise CapacityError(f"M must be a positive integer, got {M!r}")
    if not (math.isfinite(gamma) and gamma > 0):
        raise CapacityError(f"gamma must be finite and > 0, got {gamma!r}")


def _quad_capacity(M: int, gamma: float, n: int) -> float:
    nodes, weights = _quad_table(M, n)
    if gamma > _FLOAT_MAX / nodes[-1]:
        raise OverflowError(
            f"gamma * ||h||^2 exceeds float range (M={M}, gamma={gamma:g})")
    return backend.expected_log_capacity(nodes, weights, gamma)


def ergodic_capacity(M: int, gamma: float,
                     config: EstimatorConfig = DEFAULT_CONFIG) -> CapacityEstimate:
    """E[log2(1 + gamma * X)], X ~ Gamma(M, 1).

    The quadrature error bound is the difference against a half-resolution
    rule; the Monte Carlo bound is a 99% confidence half-width.
    """
    _validate_m_gamma(M, gamma)
    if config.method == "quadrature":
        value = _quad_capacity(M, gamma, config.quad_nodes)
        coarse = _quad_capacity(M, gamma, max(config.quad_nodes // 2, 2))
        bound = abs(value - coarse) + 1e-12 * (1.0 + abs(value))
        return CapacityEstimate(value=value, method="quadrature",
                                abs_error_bound=bound)
    rng = np.random.default_rng((config.seed, M))
    x = rng.gamma(shape=M, scale=1.0, size=config.mc_samples)
    if gamma > _FLOAT_MAX / float(x.max()):
        raise OverflowError(
            f"gamma * ||h||^2 exceeds float range (M={M}, gamma={gamma:g})")
    samples = np.log2(1.0 + gamma * x)
    half_width = 2.5758293035489004 * samples.std(ddof=1) / math.sqrt(len(samples))
    return CapacityEstimate(value=float(samples.mean()), method="monte-carlo",
                            abs_error_bound=float(half_width))


def capacity_bounds(M: int, gamma: float) -> tuple[float, float]:
    """Jensen bounds (log2(1 + (M-1) gamma), log2(1 + M gamma))."""
    _validate_m_gamma(M, gamma)
    return (math.log2(1.0 + (M - 1) * gamma), math.log2(1.0 + M * gamma))


def snr_lower_bound_rate(M: int, R: float) -> float:
    """Closed-form SNR (2^R - 1)/(M - 1) achieving rate R via the lower bound."""
    if M < 2:
        raise CapacityError("closed-form SNR requires M >= 2")
    if R <= 0:
        raise CapacityError("R must be > 0")
    return (2.0 ** R - 1.0) / (M - 1)


def invert_capacity(M: int, R: float, tol: float | None = None,
                    config: EstimatorConfig = DEFAULT_CONFIG) -> SnrSolution:
    """Solve ergodic_capacity(M, gamma) = R for gamma by bisection.

    The initial bracket [(2^R - 1)/M, (2^R - 1)/max(M - 1, 1/2)] follows from
    the Jensen bounds for M >= 2; for M = 1 the upper end is expanded until
    the target rate is enclosed.
    """
    if not (isinstance(M, (int, np.integer)) and M >= 1):
        raise CapacityError(f"M must be a positive integer, got {M!r}")
    if not (math.isfinite(R) and R > 0):
        raise CapacityError(f"R must be finite and > 0, got {R!r}")
    tol = config.rate_tol if tol is None else tol
    if tol <= 0:
        raise CapacityError("tol must be > 0")

    snr_scale = 2.0 ** R - 1.0
    lo = snr_scale / M
    hi = snr_scale / max(M - 1, 0.5)

    if config.method == "quadrature":
        nodes, weights = _quad_table(M, config.quad_nodes)
        cap = lambda g: backend.expected_log_capacity(nodes, weights, g)
    else:
        # common random numbers: one draw reused across all gamma probes so
        # the bracketing function is monotone sample-path-wise
        rng = np.random.default_rng((config.seed, M))
        x = rng.gamma(shape=M, scale=1.0, size=config.mc_samples)
        cap = lambda g: float(np.log2(1.0 + g * x).mean())

    expansions = 0
    while cap(hi) < R and expansions < 64:
        hi *= 2.0
        expansions += 1
    if cap(hi) < R:
        raise BracketError(
            f"upper bracket failed after {expansions} expansions "
            f"(M={M}, R={R}, hi={hi:g}, C(hi)={cap(hi):.6g})")
    if cap(lo) > R + tol:
        raise BracketError(
            f"lower bracket violated: C({lo:g}) = {cap(lo):.6g} > R = {R} "
            f"(estimator error likely exceeds tol={tol:g})")

    if config.method == "quadrature":
        gamma, residual, iters = backend.bisect_rate(
            nodes, weights, R, lo, hi, tol, 200)
    else:
        iters = 0
        gamma = 0.5 * (lo + hi)
        residual = cap(gamma) - R
        while iters < 200:
            gamma = 0.5 * (lo + hi)
            residual = cap(gamma) - R
            iters += 1
            if abs(residual) <= tol or (hi - lo) <= 1e-15 * gamma:
                break
            if residual < 0:
                lo = gamma
            else:
                hi = gamma
    if abs(residual) > tol:
        raise BracketError(
            f"bisection stalled at residual {residual:.3g} > tol {tol:g} "
            f"(M={M}, R={R}; estimator error bound may exceed tol)")
    return SnrSolution(gamma=float(gamma), residual=float(residual),
                       iterations=int(iters))
