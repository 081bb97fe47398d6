"""One-parameter sweeps and scalar maximization over the conversion model."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from .conversion import efficiency_closed_form, efficiency_upper_bound
from .errors import InvalidArgumentError
from .model import SystemConfig
from .rates import build_rate_set

AXIS_UNITS = {
    "detuning": "rad_per_s",
    "atom_number": "count",
    "rabi_drive": "rad_per_s",
    "waist_mw": "m",
}

# CSV axis-column stems; detuning keeps its historical short name.
AXIS_COLUMN = {
    "detuning": "delta",
    "atom_number": "atom_number",
    "rabi_drive": "rabi_drive",
    "waist_mw": "waist_mw",
}

_PRESCAN_POINTS = 64
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    minimum: float
    maximum: float
    points: int
    spacing: str  # "linear" | "logarithmic"
    base_config: SystemConfig

    def __post_init__(self):
        if self.axis not in AXIS_UNITS:
            raise InvalidArgumentError(f"unknown sweep axis {self.axis!r}")
        if not self.minimum < self.maximum:
            raise InvalidArgumentError("sweep range requires min < max")
        if self.points < 2:
            raise InvalidArgumentError("sweep needs at least 2 points")
        if self.spacing not in ("linear", "logarithmic"):
            raise InvalidArgumentError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "logarithmic" and self.minimum <= 0:
            raise InvalidArgumentError("logarithmic spacing requires min > 0")

    def axis_values(self, points=None):
        n = self.points if points is None else points
        if self.spacing == "logarithmic":
            return np.logspace(math.log10(self.minimum), math.log10(self.maximum), n)
        return np.linspace(self.minimum, self.maximum, n)


@dataclass(frozen=True)
class ScanResult:
    axis: str
    unit: str
    values: np.ndarray
    eta: np.ndarray
    cooperativity: np.ndarray
    fwhm: np.ndarray
    extraction_mw: np.ndarray
    extraction_opt: np.ndarray
    ok: np.ndarray
    metadata: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class BoundCurve:
    waist: np.ndarray
    eta_bound: np.ndarray
    forbidden: np.ndarray
    lambda_mw: float


@dataclass(frozen=True)
class MaximizeResult:
    axis_value: float
    eta: float
    boundary: bool    # maximum sits on a range endpoint
    multimodal: bool  # pre-scan saw multiple interior peaks; grid argmax used


def config_at(cfg: SystemConfig, axis, value):
    """Per-point configuration and detuning for one swept axis value.

    Atom-number sweeps rescale gamma_r_prime / kappa_opt_0 linearly in N
    unless the corresponding hold flag keeps them fixed.
    """
    if axis == "detuning":
        return cfg, float(value)
    if axis == "atom_number":
        changes = {"atom_number": float(value)}
        scale = float(value) / cfg.atom_number
        if not cfg.hold_gamma_r_prime:
            changes["gamma_r_prime"] = cfg.gamma_r_prime * scale
        if not cfg.hold_kappa_opt_0:
            changes["kappa_opt_0"] = cfg.kappa_opt_0 * scale
        return cfg.replace(**changes), cfg.detuning
    if axis == "rabi_drive":
        return cfg.replace(rabi_drive=float(value)), cfg.detuning
    if axis == "waist_mw":
        return cfg.replace(waist_mw=float(value)), cfg.detuning
    raise InvalidArgumentError(f"unknown sweep axis {axis!r}")


def point_result(cfg: SystemConfig, axis, value):
    """One standalone conversion evaluation at a swept axis value."""
    point_cfg, delta = config_at(cfg, axis, value)
    rates = build_rate_set(point_cfg)
    return efficiency_closed_form(delta, point_cfg.rabi_drive, rates)


def run_sweep(spec: SweepSpec) -> ScanResult:
    """Evaluate the conversion model along one axis.

    Per-point failures become NaN rows flagged in the ``ok`` column instead
    of aborting the sweep.
    """
    values = spec.axis_values()
    n = values.size
    cols = {
        name: np.full(n, np.nan)
        for name in ("eta", "cooperativity", "fwhm", "extraction_mw", "extraction_opt")
    }
    ok = np.ones(n, dtype=bool)
    for i, v in enumerate(values):
        try:
            res = point_result(spec.base_config, spec.axis, v)
        except Exception:
            ok[i] = False
            continue
        cols["eta"][i] = res.eta
        cols["cooperativity"][i] = res.cooperativity
        cols["fwhm"][i] = res.fwhm
        cols["extraction_mw"][i] = res.extraction_mw
        cols["extraction_opt"][i] = res.extraction_opt
    return ScanResult(
        axis=spec.axis,
        unit=AXIS_UNITS[spec.axis],
        values=values,
        ok=ok,
        metadata={"axis": spec.axis, "spacing": spec.spacing},
        **cols,
    )


def bound_curve(lambda_mw, waist_range, points) -> BoundCurve:
    """Diffraction-bound efficiency versus microwave waist."""
    lo, hi = waist_range
    if lo <= 0 or hi <= 0 or not lo < hi:
        raise InvalidArgumentError("waist range must be positive with min < max")
    waists = np.linspace(lo, hi, points)
    bounds = np.empty(points)
    forbidden = np.empty(points, dtype=bool)
    for i, w in enumerate(waists):
        b = efficiency_upper_bound(lambda_mw, w)
        bounds[i] = b.eta_bound
        forbidden[i] = b.forbidden
    return BoundCurve(
        waist=waists, eta_bound=bounds, forbidden=forbidden, lambda_mw=lambda_mw
    )


def _objective(spec: SweepSpec):
    cfg = spec.base_config

    def f(v):
        try:
            return point_result(cfg, spec.axis, v).eta
        except Exception:
            return -math.inf

    return f


def maximize_over_axis(spec: SweepSpec, tol=1e-6) -> MaximizeResult:
    """Golden-section maximization of eta along one axis.

    A 64-point pre-scan brackets the maximum and guards the unimodality
    assumption; multiple interior peaks degrade to grid argmax with a flag,
    an endpoint maximum is returned with the boundary flag. Plateau ties
    break toward the smallest axis value.
    """
    f = _objective(spec)
    grid = spec.axis_values(_PRESCAN_POINTS)
    samples = np.array([f(v) for v in grid])
    best = int(np.argmax(samples))  # argmax takes the first = smallest value

    interior_peaks = 0
    for i in range(1, _PRESCAN_POINTS - 1):
        if samples[i] > samples[i - 1] and samples[i] >= samples[i + 1]:
            interior_peaks += 1

    if best in (0, _PRESCAN_POINTS - 1):
        return MaximizeResult(
            axis_value=float(grid[best]),
            eta=float(samples[best]),
            boundary=True,
            multimodal=interior_peaks > 1,
        )
    if interior_peaks > 1:
        return MaximizeResult(
            axis_value=float(grid[best]),
            eta=float(samples[best]),
            boundary=False,
            multimodal=True,
        )

    log_space = spec.spacing == "logarithmic"
    to_u = math.log10 if log_space else (lambda x: x)
    from_u = (lambda u: 10.0**u) if log_space else (lambda u: u)
    a, b = to_u(grid[best - 1]), to_u(grid[best + 1])

    def g(u):
        return f(from_u(u))

    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    # In log space the interval width is already a relative tolerance.
    width_tol = tol if log_space else tol * max(abs(a), abs(b), 1e-300)
    while (b - a) > width_tol:
        if gc >= gd:  # ties move toward the smaller axis value
            b, d, gd = d, c, gc
            c = b - _GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + _GOLDEN * (b - a)
            gd = g(d)
    u_star = (a + b) / 2.0
    x_star = from_u(u_star)
    eta_star = f(x_star)
    # Never report worse than the pre-scan.
    if eta_star < samples[best]:
        x_star, eta_star = float(grid[best]), float(samples[best])
    return MaximizeResult(
        axis_value=float(x_star), eta=float(eta_star), boundary=False, multimodal=False
    )
