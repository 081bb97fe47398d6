"""Core domain types and physical-regime validation.

All rates and detunings are angular frequencies (rad/s); all lengths are
meters. Instances are frozen dataclasses and safe to share between threads.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidArgumentError

_LENGTH_FIELDS = (
    "lambda_mw",
    "lambda_opt",
    "waist_mw",
    "waist_cloud_transverse",
    "sigma_cloud_longitudinal",
    "ensemble_length",
)

_RATE_FIELDS = (
    "gamma_gr",
    "gamma_e",
    "gamma_r_prime",
    "kappa_opt_0",
    "rabi_drive",
)


@dataclass(frozen=True)
class SystemConfig:
    """Full physical description of one conversion scenario."""

    lambda_mw: float               # microwave wavelength (m)
    lambda_opt: float              # optical wavelength (m)
    waist_mw: float                # microwave Gaussian beam waist (m)
    waist_cloud_transverse: float  # transverse atomic cloud waist (m)
    sigma_cloud_longitudinal: float  # cloud width along optical axis (m)
    ensemble_length: float         # ensemble size (m)
    atom_number: float             # N
    gamma_gr: float                # single-atom microwave SE rate (rad/s)
    gamma_e: float                 # single-atom optical SE rate (rad/s)
    gamma_r_prime: float           # non-radiative / other-frequency decay (rad/s)
    kappa_opt_0: float             # intrinsic spin-wave decay (rad/s)
    rabi_drive: float              # control Rabi frequency (rad/s)
    detuning: float                # optical detuning (rad/s)
    omega_s: float = 0.0           # super-atom transition frequency (rad/s)
    od_mean_override: Optional[float] = None
    hold_gamma_r_prime: bool = True
    hold_kappa_opt_0: bool = True

    def __post_init__(self):
        for name in _LENGTH_FIELDS:
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise InvalidArgumentError(f"{name} must be strictly positive, got {v!r}")
        if not (math.isfinite(self.atom_number) and self.atom_number >= 1):
            raise InvalidArgumentError(f"atom_number must be >= 1, got {self.atom_number!r}")
        for name in _RATE_FIELDS:
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise InvalidArgumentError(f"{name} must be a non-negative rate, got {v!r}")
        if not math.isfinite(self.detuning):
            raise InvalidArgumentError(f"detuning must be finite, got {self.detuning!r}")
        if not math.isfinite(self.omega_s):
            raise InvalidArgumentError(f"omega_s must be finite, got {self.omega_s!r}")
        if self.od_mean_override is not None and not (
            math.isfinite(self.od_mean_override) and self.od_mean_override >= 0
        ):
            raise InvalidArgumentError(
                f"od_mean_override must be non-negative, got {self.od_mean_override!r}"
            )

    def replace(self, **changes) -> "SystemConfig":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class RateSet:
    """All derived collective rates of one configuration (rad/s)."""

    gamma_R: float        # collective microwave SE rate
    gamma_mw_1: float     # Gaussian-channel rate (per direction)
    gamma_r_prime: float  # non-radiative / other-frequency decay
    kappa_opt_1: float    # spin-wave radiative rate into the collected beam
    kappa_opt_0: float    # intrinsic spin-wave decay
    od_mean: float = 0.0  # mean optical depth used for kappa_opt_1

    @property
    def gamma_mw_total(self):
        return self.gamma_r_prime + self.gamma_R

    @property
    def kappa_opt_total(self):
        return self.kappa_opt_0 + self.kappa_opt_1

    @property
    def extraction_mw(self):
        total = self.gamma_mw_total
        return self.gamma_mw_1 / total if total > 0 else 0.0

    @property
    def extraction_opt(self):
        total = self.kappa_opt_total
        return self.kappa_opt_1 / total if total > 0 else 0.0


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "warn" | "fail"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def has_failures(self):
        return any(c.status == "fail" for c in self.checks)

    @property
    def has_warnings(self):
        return any(c.status == "warn" for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class RegimeThresholds:
    """Configurable thresholds for the asymptotic regime checks.

    The underlying relations are asymptotic (much-greater-than); these
    numeric stand-ins are artifact choices, not physics.
    """

    scale_ratio: float = 10.0
    atom_number_min: float = 1e3
    od_min: float = 1.0


def validate_regime(cfg: SystemConfig, thresholds: RegimeThresholds = RegimeThresholds()) -> ValidationReport:
    """Check the separation-of-scales assumptions behind the reduced model.

    Findings are reported in-band; only an unphysical sub-diffraction
    microwave waist is a hard failure.
    """
    from .rates import diffraction_limited_waist, mean_optical_depth

    checks = []

    ratio_mw = cfg.lambda_mw / cfg.ensemble_length
    checks.append(
        Check(
            "mw_wavelength_vs_ensemble",
            "pass" if ratio_mw >= thresholds.scale_ratio else "warn",
            f"lambda_mw/L = {ratio_mw:.3g} (threshold {thresholds.scale_ratio:g})",
        )
    )

    ratio_opt = cfg.ensemble_length / cfg.lambda_opt
    checks.append(
        Check(
            "ensemble_vs_opt_wavelength",
            "pass" if ratio_opt >= thresholds.scale_ratio else "warn",
            f"L/lambda_opt = {ratio_opt:.3g} (threshold {thresholds.scale_ratio:g})",
        )
    )

    checks.append(
        Check(
            "atom_number",
            "pass" if cfg.atom_number >= thresholds.atom_number_min else "warn",
            f"N = {cfg.atom_number:g} (threshold {thresholds.atom_number_min:g})",
        )
    )

    w_min = diffraction_limited_waist(cfg.lambda_mw)
    checks.append(
        Check(
            "diffraction_limit",
            "pass" if cfg.waist_mw >= w_min else "fail",
            f"waist_mw = {cfg.waist_mw:g} m, diffraction limit 2*lambda_mw/pi = {w_min:g} m",
        )
    )

    if cfg.od_mean_override is not None:
        od = cfg.od_mean_override
    else:
        od = mean_optical_depth(
            cfg.atom_number, cfg.lambda_opt, cfg.waist_cloud_transverse
        ).od_mean
    checks.append(
        Check(
            "optical_depth",
            "pass" if od >= thresholds.od_min else "warn",
            f"mean OD = {od:.3g} (threshold {thresholds.od_min:g})",
        )
    )

    return ValidationReport(checks=tuple(checks))
