"""Transceiver power bookkeeping and normalization to dimensionless parameters.

All quantities are stored in SI units: powers in Watt, bandwidth in Hz, noise
spectral density in W/Hz, channel gain linear (dB conversion happens at the
CLI boundary only), and the load-dependent draw in W per bit/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ParameterError(ValueError):
    """Raised when a physical parameter is outside its valid range."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


@dataclass(frozen=True)
class SystemParams:
    """Physical and hardware parameters of the downlink.

    B : channel bandwidth (Hz, > 0)
    N0 : noise power spectral density (W/Hz, > 0)
    Gc : average channel power gain (linear, > 0)
    alpha : PA inefficiency, consumed-to-radiated power ratio (>= 1)
    P_BS : per-antenna RF-chain power at the base station (W)
    P_UT : RF-chain power at the user terminal (W)
    P_OSC : local-oscillator power (W)
    P_s : fixed baseband power (W)
    P_dec : load-dependent power, coding/decoding/backhaul (W per bit/s)
    C0 : energy per arithmetic operation of the beamformer (J)
    """

    B: float
    N0: float
    Gc: float
    alpha: float
    P_BS: float = 0.0
    P_UT: float = 0.0
    P_OSC: float = 0.0
    P_s: float = 0.0
    P_dec: float = 0.0
    C0: float = 0.0

    def __post_init__(self):
        for name in ("B", "N0", "Gc", "alpha", "P_BS", "P_UT", "P_OSC",
                     "P_s", "P_dec", "C0"):
            v = getattr(self, name)
            _require(math.isfinite(v), f"{name} must be finite, got {v!r}")
        _require(self.B > 0, "B must be > 0")
        _require(self.N0 > 0, "N0 must be > 0")
        _require(self.Gc > 0, "Gc must be > 0")
        _require(self.alpha >= 1, "alpha must be >= 1")
        for name in ("P_BS", "P_UT", "P_OSC", "P_s", "P_dec", "C0"):
            _require(getattr(self, name) >= 0, f"{name} must be >= 0")

    @property
    def P_C(self) -> float:
        """Fixed circuit power P_UT + P_OSC + P_s (W)."""
        return self.P_UT + self.P_OSC + self.P_s

    @property
    def per_antenna_power(self) -> float:
        """Per-antenna draw P_BS + 2*C0*B: RF chain plus beamforming ops (W)."""
        return self.P_BS + 2.0 * self.C0 * self.B

    def with_gc(self, Gc: float) -> "SystemParams":
        """Copy with a different channel gain (used by Gc sweeps)."""
        return SystemParams(B=self.B, N0=self.N0, Gc=Gc, alpha=self.alpha,
                            P_BS=self.P_BS, P_UT=self.P_UT, P_OSC=self.P_OSC,
                            P_s=self.P_s, P_dec=self.P_dec, C0=self.C0)


@dataclass(frozen=True)
class Theta:
    """Dimensionless parameter vector (alpha, rho, rho_c, rho_d).

    rho scales the per-antenna draw, rho_c the fixed circuit draw, rho_d the
    per-rate draw; all by the channel-gain-to-noise ratio.
    """

    alpha: float
    rho: float
    rho_c: float
    rho_d: float

    def __post_init__(self):
        for name in ("alpha", "rho", "rho_c", "rho_d"):
            v = getattr(self, name)
            _require(math.isfinite(v), f"{name} must be finite, got {v!r}")
        _require(self.alpha >= 1, "alpha must be >= 1")
        _require(self.rho > 0, "rho must be > 0")
        _require(self.rho_c >= 0, "rho_c must be >= 0")
        _require(self.rho_d >= 0, "rho_d must be >= 0")


@dataclass(frozen=True)
class PowerBreakdown:
    """Itemized system power consumption in Watt.

    f_pa is the fraction of the total drawn by the power amplifiers.
    """

    p_rf_bs: float      # M * P_BS
    p_rf_fixed: float   # P_UT + P_OSC
    p_lp: float         # 2 * M * C0 * B
    p_fixed: float      # P_s
    p_load: float       # R * B * P_dec
    p_pa: float         # alpha * P_T
    total: float
    f_pa: float


def normalize(params: SystemParams) -> Theta:
    """Map physical parameters to the dimensionless vector Theta."""
    scale = params.Gc / (params.N0 * params.B)
    return Theta(
        alpha=params.alpha,
        rho=scale * params.per_antenna_power,
        rho_c=scale * params.P_C,
        rho_d=params.Gc * params.P_dec / params.N0,
    )


def total_power(params: SystemParams, M: float, R: float,
                P_T: float) -> PowerBreakdown:
    """Itemize total consumption for M antennas, rate R and radiated power P_T.

    M may be fractional (the continuous relaxation evaluates non-integer
    antenna counts); the model is linear in M either way.
    """
    _require(M >= 1, "M must be >= 1")
    _require(R >= 0, "R must be >= 0")
    _require(P_T >= 0, "P_T must be >= 0")
    p_rf_bs = M * params.P_BS
    p_lp = 2.0 * M * params.C0 * params.B
    p_rf_fixed = params.P_UT + params.P_OSC
    p_load = R * params.B * params.P_dec
    p_pa = params.alpha * P_T
    total = p_rf_bs + p_lp + p_rf_fixed + params.P_s + p_load + p_pa
    return PowerBreakdown(
        p_rf_bs=p_rf_bs, p_rf_fixed=p_rf_fixed, p_lp=p_lp,
        p_fixed=params.P_s, p_load=p_load, p_pa=p_pa, total=total,
        f_pa=p_pa / total if total > 0 else 0.0,
    )


def pa_fraction_closed_form(params: SystemParams, R: float) -> float:
    """PA share of total power at the near-optimal antenna count.

    Closed form; always in (0, 1/2). Tends to 1/2 as Gc -> 0 or R -> inf,
    and to 0 as R -> 0 or Gc -> inf.
    """
    _require(R > 0, "R must be > 0 (the closed form degenerates at R = 0)")
    num = params.per_antenna_power + params.P_C + R * params.B * params.P_dec
    # the per-antenna draw also appears under the square root: with the
    # near-optimal antenna count the PA draw equals
    # sqrt(N0*B/Gc * alpha*(2^R - 1) * per_antenna_power)
    den = math.sqrt(params.N0 * params.B) * math.sqrt(
        params.alpha * (2.0 ** R - 1.0) * params.per_antenna_power)
    return 1.0 / (2.0 + math.sqrt(params.Gc) * num / den)
