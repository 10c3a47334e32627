"""Energy-efficiency objectives and antenna-count optimization.

Three objectives share the inverse-EE form
    1/zeta = rho_d + (M*rho + rho_c)/R + alpha*gamma/R:
"exact" uses the numerically inverted capacity SNR, "bound" the closed-form
SNR (2^R - 1)/(M - 1), and "relaxed" the continuous minimizer of the bound
objective, which has a closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from mimo_ee.capacity import (
    DEFAULT_CONFIG,
    CapacityError,
    EstimatorConfig,
    invert_capacity,
    snr_lower_bound_rate,
)
from mimo_ee.params import PowerBreakdown, SystemParams, Theta, total_power


class OptimizationError(RuntimeError):
    """The integer search terminated without locating a minimum."""


@dataclass(frozen=True)
class EEResult:
    """An energy-efficiency evaluation or optimization outcome.

    M is integral for the exact/bound objectives and real for the relaxed
    one. eta and breakdown are only available when physical parameters were
    supplied (the normalized objectives need only Theta).
    """

    M: float
    gamma: float
    zeta: float
    objective: str                        # "exact", "bound" or "relaxed"
    eta: float | None = None              # bits/Joule
    breakdown: PowerBreakdown | None = None
    terminated_by: str = "closed-form"    # "closed-form", "stop-rule" or "cap"


def _inverse_zeta(M: float, gamma: float, R: float, theta: Theta) -> float:
    return theta.rho_d + (M * theta.rho + theta.rho_c) / R \
        + theta.alpha * gamma / R


def _attach_physical(result: EEResult,
                     params: SystemParams | None, R: float) -> EEResult:
    if params is None:
        return result
    eta = result.zeta * params.Gc / params.N0
    p_t = result.gamma * params.N0 * params.B / params.Gc
    breakdown = total_power(params, result.M, R, p_t)
    return EEResult(M=result.M, gamma=result.gamma, zeta=result.zeta,
                    objective=result.objective, eta=eta, breakdown=breakdown,
                    terminated_by=result.terminated_by)


@lru_cache(maxsize=65536)
def _gamma0(M: int, R: float, config: EstimatorConfig) -> float:
    return invert_capacity(M, R, config=config).gamma


def zeta_exact(M: int, R: float, theta: Theta,
               params: SystemParams | None = None,
               config: EstimatorConfig = DEFAULT_CONFIG) -> EEResult:
    """Normalized EE at the capacity-exact SNR for a given antenna count."""
    gamma = _gamma0(int(M), R, config)
    zeta = 1.0 / _inverse_zeta(M, gamma, R, theta)
    return _attach_physical(
        EEResult(M=int(M), gamma=gamma, zeta=zeta, objective="exact"),
        params, R)


def zeta_bound(M: int, R: float, theta: Theta,
               params: SystemParams | None = None) -> EEResult:
    """Normalized EE at the closed-form SNR; defined for M >= 2 only."""
    gamma = snr_lower_bound_rate(int(M), R)
    zeta = 1.0 / _inverse_zeta(M, gamma, R, theta)
    return _attach_physical(
        EEResult(M=int(M), gamma=gamma, zeta=zeta, objective="bound"),
        params, R)


def relaxed_antenna_count(R: float, theta: Theta) -> float:
    """Continuous minimizer 1 + sqrt((alpha/rho)(2^R - 1)) of the bound objective."""
    if R <= 0:
        raise CapacityError("R must be > 0")
    return 1.0 + math.sqrt(theta.alpha / theta.rho * (2.0 ** R - 1.0))


def relaxed_optimum(R: float, theta: Theta,
                    params: SystemParams | None = None) -> EEResult:
    """Closed-form continuous relaxation of the bound-objective optimum."""
    m_star = relaxed_antenna_count(R, theta)
    zeta = R / (theta.rho + theta.rho_c + R * theta.rho_d
                + 2.0 * math.sqrt(theta.alpha * theta.rho * (2.0 ** R - 1.0)))
    gamma = (2.0 ** R - 1.0) / (m_star - 1.0)
    return _attach_physical(
        EEResult(M=m_star, gamma=gamma, zeta=zeta, objective="relaxed"),
        params, R)


def optimize_bound(R: float, theta: Theta,
                   params: SystemParams | None = None) -> EEResult:
    """Integer minimizer of the bound objective over M >= 2.

    Convexity in M makes floor/ceil of the continuous minimizer sufficient;
    ties break toward the smaller antenna count.
    """
    m_real = relaxed_antenna_count(R, theta)
    candidates = sorted({max(2, math.floor(m_real)), max(2, math.ceil(m_real))})
    best = None
    for m in candidates:
        r = zeta_bound(m, R, theta, params)
        if best is None or r.zeta > best.zeta:
            best = r
    return best


def optimize_exact(R: float, theta: Theta,
                   search_cap: int | None = None,
                   params: SystemParams | None = None,
                   config: EstimatorConfig = DEFAULT_CONFIG,
                   stop_width: int = 8) -> EEResult:
    """Integer minimizer of the exact objective over M in [1, search_cap].

    Scans outward from the rounded continuous minimizer and stops a direction
    once the objective has increased for `stop_width` consecutive steps; the
    objective is only empirically unimodal, hence the guard. Raises if the cap
    terminates the upward scan while the objective is still improving.
    """
    m_real = relaxed_antenna_count(R, theta)
    if search_cap is None:
        search_cap = 4 * math.ceil(m_real) + 16
    if search_cap < 2 * math.ceil(m_real):
        raise OptimizationError(
            f"search_cap {search_cap} below 2*ceil(M') = {2 * math.ceil(m_real)}")

    def inv(m: int) -> float:
        return 1.0 / zeta_exact(m, R, theta, config=config).zeta

    start = min(max(1, round(m_real)), search_cap)
    best_m, best_v = start, inv(start)

    # downward
    run = 0
    prev = best_v
    for m in range(start - 1, 0, -1):
        v = inv(m)
        if v < best_v:
            best_m, best_v = m, v
        run = run + 1 if v > prev else 0
        prev = v
        if run >= stop_width:
            break

    # upward
    run = 0
    prev = best_v
    capped_while_improving = False
    terminated_by = "stop-rule"
    for m in range(start + 1, search_cap + 1):
        v = inv(m)
        if v < best_v:
            best_m, best_v = m, v
        run = run + 1 if v > prev else 0
        prev = v
        if run >= stop_width:
            break
    else:
        terminated_by = "cap"
        capped_while_improving = best_m >= search_cap - 1
    if capped_while_improving:
        raise OptimizationError(
            f"objective still decreasing at search_cap={search_cap} "
            f"(R={R}, best M={best_m})")

    result = zeta_exact(best_m, R, theta, params=params, config=config)
    return EEResult(M=result.M, gamma=result.gamma, zeta=result.zeta,
                    objective="exact", eta=result.eta,
                    breakdown=result.breakdown, terminated_by=terminated_by)
