"""Collective coupling rates from microscopic and geometric parameters.

The microwave side treats the ensemble as a point-like super-atom with
collective decay gamma_R = N*gamma_gr, of which a Gaussian beam of waist w0
carries gamma_mw_1 = (3 lambda_mw^2 / 4 pi^2 w0^2) * gamma_R per direction.
The optical side couples a spin-wave mode to a matched free-space beam at
kappa_opt_1 = (OD/4) * gamma_e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .model import RateSet, SystemConfig


@dataclass(frozen=True)
class OpticalDepthModel:
    cross_section: float   # resonant cross-section sigma_0 (m^2)
    column_density: float  # mean transverse column density (1/m^2)
    od_mean: float         # dimensionless mean optical depth


def collective_mw_decay(atom_number, gamma_gr):
    """Collective super-atom amplitude decay rate N*gamma_gr (rad/s)."""
    if atom_number < 1:
        raise InvalidArgumentError(f"atom_number must be >= 1, got {atom_number!r}")
    if gamma_gr < 0:
        raise InvalidArgumentError(f"gamma_gr must be >= 0, got {gamma_gr!r}")
    return atom_number * gamma_gr


def gaussian_channel_rate(lambda_mw, waist_mw, gamma_R):
    """Decay rate into one direction of a Gaussian beam of waist waist_mw.

    Not clamped to gamma_R: sub-diffraction waists give unphysical ratios
    which validate_regime flags instead.
    """
    if waist_mw <= 0:
        raise InvalidArgumentError(f"waist_mw must be > 0, got {waist_mw!r}")
    return (3.0 * lambda_mw**2 / (4.0 * math.pi**2 * waist_mw**2)) * gamma_R


def diffraction_limited_waist(lambda_mw):
    """Minimum free-space Gaussian waist 2*lambda_mw/pi (m)."""
    if lambda_mw <= 0:
        raise InvalidArgumentError(f"lambda_mw must be > 0, got {lambda_mw!r}")
    return 2.0 * lambda_mw / math.pi


def mean_optical_depth(atom_number, lambda_opt, waist_cloud_transverse):
    """Mean optical depth of a Gaussian cloud along the optical axis.

    Resonant two-level cross-section 3*lambda^2/(2 pi) times the mean
    Gaussian column density N/(2 pi w_t^2). A stand-in model; callers may
    bypass it entirely via SystemConfig.od_mean_override.
    """
    if atom_number <= 0 or lambda_opt <= 0 or waist_cloud_transverse <= 0:
        raise InvalidArgumentError("mean_optical_depth requires positive inputs")
    sigma_0 = 3.0 * lambda_opt**2 / (2.0 * math.pi)
    column = atom_number / (2.0 * math.pi * waist_cloud_transverse**2)
    return OpticalDepthModel(
        cross_section=sigma_0, column_density=column, od_mean=sigma_0 * column
    )


def optical_channel_rate(od_mean, gamma_e):
    """Spin-wave radiative rate (OD/4)*gamma_e into the matched beam (rad/s)."""
    if od_mean < 0 or gamma_e < 0:
        raise InvalidArgumentError("od_mean and gamma_e must be >= 0")
    return 0.25 * od_mean * gamma_e


def build_rate_set(cfg: SystemConfig) -> RateSet:
    """Derive every collective rate of a configuration."""
    gamma_R = collective_mw_decay(cfg.atom_number, cfg.gamma_gr)
    gamma_mw_1 = gaussian_channel_rate(cfg.lambda_mw, cfg.waist_mw, gamma_R)
    if cfg.od_mean_override is not None:
        od = cfg.od_mean_override
    else:
        od = mean_optical_depth(
            cfg.atom_number, cfg.lambda_opt, cfg.waist_cloud_transverse
        ).od_mean
    kappa_opt_1 = optical_channel_rate(od, cfg.gamma_e)
    return RateSet(
        gamma_R=gamma_R,
        gamma_mw_1=gamma_mw_1,
        gamma_r_prime=cfg.gamma_r_prime,
        kappa_opt_1=kappa_opt_1,
        kappa_opt_0=cfg.kappa_opt_0,
        od_mean=od,
    )
