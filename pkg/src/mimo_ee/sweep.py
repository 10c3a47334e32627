"""Sweep driver: config parsing, trade-off curve computation, CSV output.

The config format is a flat ``key = value`` text file ('#' starts a comment).
Units follow the internal SI convention except at this boundary: Gc is given
in dB and P_dec in W per Gbit/s, both converted at parse time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mimo_ee.capacity import BracketError, EstimatorConfig
from mimo_ee.optimizer import (
    EEResult,
    OptimizationError,
    optimize_bound,
    optimize_exact,
    relaxed_optimum,
    zeta_exact,
)
from mimo_ee.params import ParameterError, SystemParams, normalize
from mimo_ee.regimes import DEFAULT_THRESHOLD, RegimeReport, classify

CSV_HEADER = ("sweep_var,sweep_value,objective,M,gamma,zeta,"
              "eta_bits_per_joule,f_pa,regime,status")

OBJECTIVES = ("exact", "bound", "relaxed", "fixed-m-1")


class ConfigError(ValueError):
    """Malformed or inconsistent configuration."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str                 # "R" or "Gc"
    grid: tuple[float, ...]       # R in bits/s/Hz, Gc in dB
    fixed_value: float            # the non-swept quantity (R, or Gc in dB)
    params: SystemParams          # Gc field is overwritten per grid point
    objectives: tuple[str, ...]
    output_path: str | None = None
    estimator: EstimatorConfig = EstimatorConfig()
    dominance_threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if self.variable not in ("R", "Gc"):
            raise ConfigError(f"unknown sweep variable {self.variable!r}")
        if not self.grid:
            raise ConfigError("sweep grid is empty")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ConfigError("sweep grid must be strictly increasing")
        unknown = set(self.objectives) - set(OBJECTIVES)
        if unknown or not self.objectives:
            raise ConfigError(f"objectives must be a nonempty subset of "
                              f"{OBJECTIVES}, got {self.objectives}")


@dataclass(frozen=True)
class CurvePoint:
    sweep_value: float
    objective: str
    result: EEResult | None       # None when the point failed
    regime: RegimeReport
    status: str                   # "ok" or an error summary


@dataclass(frozen=True)
class TradeoffCurve:
    variable: str
    points: tuple[CurvePoint, ...]


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def parse_config(path: str) -> dict[str, str]:
    """Read a flat key = value file into a string dict."""
    out: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, value = line.split("=", 1)
                out[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return out


def _get_float(cfg: dict[str, str], key: str, default: float | None = None) -> float:
    if key not in cfg:
        if default is None:
            raise ConfigError(f"missing required config key {key!r}")
        return default
    try:
        return float(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"config key {key!r}: not a number: {cfg[key]!r}") from exc


def params_from_config(cfg: dict[str, str], gc_db: float | None = None) -> SystemParams:
    """Build SystemParams from config keys; Gc enters in dB, P_dec in W/Gbit/s."""
    if gc_db is None:
        gc_db = _get_float(cfg, "Gc_dB")
    if "alpha" in cfg:
        alpha = _get_float(cfg, "alpha")
    else:
        eff = _get_float(cfg, "pa_efficiency", 1.0)
        if not 0 < eff <= 1:
            raise ConfigError("pa_efficiency must be in (0, 1]")
        alpha = 1.0 / eff
    try:
        return SystemParams(
            B=_get_float(cfg, "B"),
            N0=_get_float(cfg, "N0"),
            Gc=db_to_linear(gc_db),
            alpha=alpha,
            P_BS=_get_float(cfg, "P_BS", 0.0),
            P_UT=_get_float(cfg, "P_UT", 0.0),
            P_OSC=_get_float(cfg, "P_OSC", 0.0),
            P_s=_get_float(cfg, "P_s", 0.0),
            P_dec=_get_float(cfg, "P_dec", 0.0) * 1e-9,  # W/Gbit/s -> W/bit/s
            C0=_get_float(cfg, "C0", 0.0),
        )
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc


def estimator_from_config(cfg: dict[str, str],
                          seed: int | None = None) -> EstimatorConfig:
    return EstimatorConfig(
        method=cfg.get("estimator", "quadrature"),
        quad_nodes=int(_get_float(cfg, "quad_nodes", 128)),
        mc_samples=int(_get_float(cfg, "mc_samples", 1_000_000)),
        seed=int(_get_float(cfg, "seed", 0)) if seed is None else seed,
        rate_tol=_get_float(cfg, "rate_tol", 1e-6),
    )


def _parse_grid(text: str) -> tuple[float, ...]:
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ConfigError("grid step must be > 0")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(start + i * step for i in range(n))
    return tuple(float(p) for p in text.split(","))


def sweep_spec_from_config(path: str, out: str | None = None,
                           seed: int | None = None,
                           objectives: str | None = None) -> SweepSpec:
    cfg = parse_config(path)
    variable = cfg.get("variable", "Gc")
    if "grid" not in cfg:
        raise ConfigError("missing required config key 'grid'")
    grid = _parse_grid(cfg["grid"])
    if variable == "Gc":
        fixed = _get_float(cfg, "R")
        params = params_from_config(cfg, gc_db=grid[0])
    else:
        fixed = _get_float(cfg, "Gc_dB")
        params = params_from_config(cfg, gc_db=fixed)
    obj_text = objectives if objectives is not None else cfg.get("objectives",
                                                                "exact,relaxed")
    return SweepSpec(
        variable=variable,
        grid=grid,
        fixed_value=fixed,
        params=params,
        objectives=tuple(o.strip() for o in obj_text.split(",") if o.strip()),
        output_path=out if out is not None else cfg.get("out"),
        estimator=estimator_from_config(cfg, seed=seed),
        dominance_threshold=_get_float(cfg, "dominance_threshold",
                                       DEFAULT_THRESHOLD),
    )


def _evaluate(objective: str, R: float, params: SystemParams,
              config: EstimatorConfig) -> EEResult:
    theta = normalize(params)
    if objective == "exact":
        return optimize_exact(R, theta, params=params, config=config)
    if objective == "bound":
        return optimize_bound(R, theta, params=params)
    if objective == "relaxed":
        return relaxed_optimum(R, theta, params=params)
    if objective == "fixed-m-1":
        return zeta_exact(1, R, theta, params=params, config=config)
    raise ConfigError(f"unknown objective {objective!r}")


def run_sweep(spec: SweepSpec) -> TradeoffCurve:
    """Evaluate every requested objective at every grid point.

    Per-point numerical failures are recorded in the row status and do not
    abort the sweep.
    """
    points = []
    for value in spec.grid:
        if spec.variable == "Gc":
            params = spec.params.with_gc(db_to_linear(value))
            R = spec.fixed_value
        else:
            params = spec.params
            R = value
        regime = classify(R, params, spec.dominance_threshold)
        for objective in spec.objectives:
            try:
                result = _evaluate(objective, R, params, spec.estimator)
                status = "ok"
            except (BracketError, OptimizationError, OverflowError) as exc:
                result = None
                status = f"error: {exc}"
            points.append(CurvePoint(sweep_value=value, objective=objective,
                                     result=result, regime=regime,
                                     status=status))
    return TradeoffCurve(variable=spec.variable, points=tuple(points))


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def emit_csv(curve: TradeoffCurve, path: str) -> None:
    """Write the curve as deterministic UTF-8 CSV (9 significant digits)."""
    if not curve.points:
        raise ValueError("refusing to write an empty trade-off curve")
    lines = [CSV_HEADER]
    for pt in curve.points:
        if pt.result is not None:
            r = pt.result
            f_pa = r.breakdown.f_pa if r.breakdown is not None else math.nan
            fields = [curve.variable, _fmt(pt.sweep_value), pt.objective,
                      _fmt(r.M), _fmt(r.gamma), _fmt(r.zeta),
                      _fmt(r.eta) if r.eta is not None else "",
                      _fmt(f_pa), pt.regime.regime, pt.status]
        else:
            fields = [curve.variable, _fmt(pt.sweep_value), pt.objective,
                      "", "", "", "", "", pt.regime.regime,
                      pt.status.replace(",", ";")]
        lines.append(",".join(fields))
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def compare_fixed_m(R: float, params: SystemParams, M_fixed: int,
                    config: EstimatorConfig = EstimatorConfig()) -> float:
    """Ratio of the optimal exact EE to the EE at a frozen antenna count."""
    theta = normalize(params)
    best = optimize_exact(R, theta, params=params, config=config)
    fixed = zeta_exact(M_fixed, R, theta, params=params, config=config)
    return best.eta / fixed.eta
