"""Asymptotic operating regimes of the optimal SE-EE trade-off.

Four regimes, each defined by a dominance inequality between one term of the
optimal-EE denominator and the rest: small-rate and large-rate (fixed channel
gain), and large-gain and small-gain (fixed rate). "Much smaller/larger than"
is operationalized as a configurable dominance ratio, default 10x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mimo_ee.optimizer import relaxed_antenna_count, relaxed_optimum
from mimo_ee.params import SystemParams, Theta, normalize

DEFAULT_THRESHOLD = 10.0


@dataclass(frozen=True)
class RegimeReport:
    regime: str               # "small-R", "large-R", "large-Gc", "small-Gc",
                              # or "transitional"
    lhs: float                # left side of the defining inequality
    rhs: float
    dominance_ratio: float    # lhs / rhs
    approx_zeta_or_eta: float # regime approximation of zeta' (rate regimes)
                              # or eta' (gain regimes); zeta' if transitional
    approx_M: float
    satisfied: tuple[str, ...] = ()  # every regime whose inequality holds


def small_r_approx(R: float, theta: Theta) -> tuple[float, float]:
    """Small-rate limit: zeta' ~ R/(rho + rho_c), single antenna."""
    return (R / (theta.rho + theta.rho_c), 1.0)


def large_r_approx(R: float, theta: Theta) -> float:
    """Large-rate limit of zeta'; decays to zero as R grows."""
    return 1.0 / (theta.rho_d + 2.0 * math.sqrt(
        theta.alpha * theta.rho * (2.0 ** R - 1.0) / R ** 2))


def large_gc_approx(R: float, params: SystemParams) -> float:
    """Large-gain limit of eta' in bits/Joule; independent of Gc."""
    return R * params.B / (params.per_antenna_power + params.P_C
                           + R * params.B * params.P_dec)


def small_gc_approx(R: float, params: SystemParams) -> tuple[float, float]:
    """Small-gain limit: eta' proportional to sqrt(Gc), M to 1/sqrt(Gc)."""
    snr_scale = params.alpha * (2.0 ** R - 1.0)
    eta = math.sqrt(params.Gc) * R / (
        2.0 * math.sqrt(params.N0 / params.B)
        * math.sqrt(snr_scale * params.per_antenna_power))
    m = 1.0 + math.sqrt(params.N0 * params.B / params.Gc) \
        * math.sqrt(snr_scale / params.per_antenna_power)
    return (eta, m)


def classify(R: float, params: SystemParams,
             threshold: float = DEFAULT_THRESHOLD) -> RegimeReport:
    """Decide which regime (if any) an operating point falls in.

    A "much less" inequality is satisfied when lhs * threshold < rhs, and a
    "much greater" one when lhs > threshold * rhs, both strictly; otherwise
    the point is transitional. The inequalities overlap pairwise (small-R
    implies large-Gc, small-Gc implies large-R when the thresholds hold), so
    regimes are checked most-specific first: small-R, large-Gc, small-Gc,
    large-R.
    """
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    theta = normalize(params)

    rate_lhs = R * theta.rho_d + 2.0 * math.sqrt(
        theta.alpha * theta.rho * (2.0 ** R - 1.0))
    gain_lhs = 2.0 * math.sqrt(params.N0 * params.B / params.Gc) * math.sqrt(
        params.alpha * (2.0 ** R - 1.0) * params.per_antenna_power)
    per_antenna = params.per_antenna_power

    # (name, lhs, rhs, direction): "lt" means lhs << rhs
    checks = [
        ("small-R", rate_lhs, theta.rho, "lt"),
        ("large-Gc", gain_lhs, per_antenna, "lt"),
        ("small-Gc", gain_lhs,
         per_antenna + R * params.B * params.P_dec + params.P_C, "gt"),
        ("large-R", rate_lhs, theta.rho + theta.rho_c, "gt"),
    ]

    satisfied = tuple(
        name for name, lhs, rhs, direction in checks
        if (lhs * threshold < rhs if direction == "lt"
            else lhs > threshold * rhs))

    if not satisfied:
        relaxed = relaxed_optimum(R, theta)
        return RegimeReport(regime="transitional", lhs=rate_lhs,
                            rhs=theta.rho, dominance_ratio=rate_lhs / theta.rho,
                            approx_zeta_or_eta=relaxed.zeta,
                            approx_M=relaxed.M, satisfied=())

    name = satisfied[0]
    lhs, rhs = next((l, r) for n, l, r, _ in checks if n == name)
    if name == "small-R":
        approx, m = small_r_approx(R, theta)
    elif name == "large-R":
        approx = large_r_approx(R, theta)
        m = relaxed_antenna_count(R, theta)
    elif name == "large-Gc":
        approx = large_gc_approx(R, params)
        m = 1.0
    else:
        approx, m = small_gc_approx(R, params)
    return RegimeReport(regime=name, lhs=lhs, rhs=rhs,
                        dominance_ratio=lhs / rhs,
                        approx_zeta_or_eta=approx, approx_M=m,
                        satisfied=satisfied)
