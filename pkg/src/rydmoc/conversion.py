"""Conversion efficiency: closed form, numeric steady-state oracle, bound.

The super-atom S and the spin-wave E form a beam-splitter pair coupled at
the control Rabi frequency. Closed form:

    eta = [gamma_mw_1 / (gamma_r_prime + gamma_R)]
        * [kappa_opt_1 / (kappa_opt_0 + kappa_opt_1)]
        * 4 C / ((1 + C)^2 + delta^2 / kappa_tot^2)

with cooperativity C = Omega_c^2 / (gamma_mw_total * kappa_opt_total).
The numeric route solves the 2x2 complex steady state of the coupled-mode
equations directly and is kept independent of the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, SingularSystemError
from .model import RateSet
from .rates import diffraction_limited_waist


@dataclass(frozen=True)
class ConversionResult:
    eta: float
    cooperativity: float
    extraction_mw: float
    extraction_opt: float
    internal_factor: float
    fwhm: float  # rad/s
    method: str  # "closed_form" | "numeric"


@dataclass(frozen=True)
class BoundResult:
    eta_bound: float
    forbidden: bool  # waist below the diffraction limit


@dataclass(frozen=True)
class OperatingPoint:
    cooperativity: float
    delta: float
    eta: float


def cooperativity(rabi_drive, rates: RateSet):
    """C = Omega_c^2 / (gamma_mw_total * kappa_opt_total)."""
    gm = rates.gamma_mw_total
    kt = rates.kappa_opt_total
    if gm <= 0 or kt <= 0:
        raise InvalidArgumentError("cooperativity needs strictly positive total rates")
    return rabi_drive**2 / (gm * kt)


def bandwidth_fwhm(coop, kappa_total):
    """Analytic FWHM of eta(delta): 2 * kappa_total * (1 + C) (rad/s)."""
    if kappa_total <= 0:
        raise InvalidArgumentError("kappa_total must be > 0")
    return 2.0 * kappa_total * (1.0 + coop)


def efficiency_closed_form(delta, rabi_drive, rates: RateSet) -> ConversionResult:
    """Closed-form conversion efficiency at optical detuning delta."""
    kt = rates.kappa_opt_total
    if kt <= 0:
        raise InvalidArgumentError("kappa_opt_total must be > 0")
    c = cooperativity(rabi_drive, rates)
    internal = 4.0 * c / ((1.0 + c) ** 2 + (delta / kt) ** 2)
    eta = rates.extraction_mw * rates.extraction_opt * internal
    return ConversionResult(
        eta=eta,
        cooperativity=c,
        extraction_mw=rates.extraction_mw,
        extraction_opt=rates.extraction_opt,
        internal_factor=internal,
        fwhm=bandwidth_fwhm(c, kt),
        method="closed_form",
    )


def efficiency_numeric(
    delta, rabi_drive, rates: RateSet, direction="mw_to_opt", mw_detuning=0.0
) -> ConversionResult:
    """Conversion efficiency from the explicit 2x2 steady-state solve.

    Independent oracle for the closed form. ``mw_detuning`` generalizes
    beyond the on-resonance microwave assumption and defaults to zero.
    """
    if direction not in ("mw_to_opt", "opt_to_mw"):
        raise InvalidArgumentError(f"unknown direction {direction!r}")
    gm = rates.gamma_mw_total
    kt = rates.kappa_opt_total
    a = np.array(
        [
            [1j * mw_detuning + gm, 1j * rabi_drive],
            [1j * rabi_drive, 1j * delta + kt],
        ],
        dtype=complex,
    )
    if gm == 0 and kt == 0:
        raise SingularSystemError("all dissipation rates are zero")
    if direction == "mw_to_opt":
        rhs = np.array([-1j * math.sqrt(2.0 * rates.gamma_mw_1), 0.0], dtype=complex)
        out_rate = rates.kappa_opt_1
        out_index = 1
    else:
        rhs = np.array([0.0, -1j * math.sqrt(2.0 * rates.kappa_opt_1)], dtype=complex)
        out_rate = rates.gamma_mw_1
        out_index = 0
    try:
        amps = np.linalg.solve(a, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(str(exc)) from exc
    out = -1j * math.sqrt(2.0 * out_rate) * amps[out_index]
    eta = float(abs(out) ** 2)

    ext = rates.extraction_mw * rates.extraction_opt
    if gm > 0 and kt > 0:
        c = cooperativity(rabi_drive, rates)
        fwhm = bandwidth_fwhm(c, kt)
    else:
        c = 0.0
        fwhm = float("nan")
    return ConversionResult(
        eta=eta,
        cooperativity=c,
        extraction_mw=rates.extraction_mw,
        extraction_opt=rates.extraction_opt,
        internal_factor=eta / ext if ext > 0 else 0.0,
        fwhm=fwhm,
        method="numeric",
    )


def efficiency_upper_bound(lambda_mw, waist_mw) -> BoundResult:
    """Fundamental efficiency cap 3 lambda_mw^2 / (4 pi^2 waist^2)."""
    if waist_mw <= 0:
        raise InvalidArgumentError(f"waist_mw must be > 0, got {waist_mw!r}")
    bound = 3.0 * lambda_mw**2 / (4.0 * math.pi**2 * waist_mw**2)
    return BoundResult(
        eta_bound=bound, forbidden=waist_mw < diffraction_limited_waist(lambda_mw)
    )


def optimal_operating_point(rates: RateSet) -> OperatingPoint:
    """Analytic maximum of eta: C = 1, delta = 0, eta = product of extractions."""
    return OperatingPoint(
        cooperativity=1.0,
        delta=0.0,
        eta=rates.extraction_mw * rates.extraction_opt,
    )
