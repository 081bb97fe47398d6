"""Multi-channel input-output model of the super-atom.

The super-atom couples to n radiation channels with rates gamma_p summing to
gamma_R, plus a non-radiative loss gamma_r_prime. Steady state:

    S(omega) = -i sum_p sqrt(2 gamma_p) b_p,in
               / (-i (omega - omega_s) + gamma_r_prime + sum_p gamma_p)

    b_p,out  = b_p,in - i sqrt(2 gamma_p) S(omega)

With gamma_r_prime = 0 the resulting scattering matrix is unitary and
symmetric at every frequency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .errors import InvalidArgumentError, SingularSystemError
from .model import SystemConfig

FORWARD = "gaussian_forward"
BACKWARD = "gaussian_backward"
REMAINDER = "uncollected_remainder"

_SUM_RULE_RTOL = 1e-12


@dataclass(frozen=True)
class Channel:
    label: str
    gamma: float  # rad/s
    kind: str     # "collected" | "uncollected"


@dataclass(frozen=True)
class ChannelSet:
    """Ordered radiative channels of the super-atom; rates sum to gamma_R."""

    channels: Tuple[Channel, ...]
    gamma_r_prime: float = 0.0

    def __post_init__(self):
        if not self.channels:
            raise InvalidArgumentError("ChannelSet needs at least one channel")
        for ch in self.channels:
            if ch.gamma < 0:
                raise InvalidArgumentError(f"channel {ch.label!r} has negative rate")
            if ch.kind not in ("collected", "uncollected"):
                raise InvalidArgumentError(f"channel {ch.label!r} has unknown kind {ch.kind!r}")
        if self.gamma_r_prime < 0:
            raise InvalidArgumentError("gamma_r_prime must be >= 0")

    @property
    def gamma_radiative(self):
        return sum(ch.gamma for ch in self.channels)

    @property
    def gamma_total(self):
        return self.gamma_r_prime + self.gamma_radiative

    @property
    def rates(self):
        return np.array([ch.gamma for ch in self.channels])

    def index_of(self, label):
        for i, ch in enumerate(self.channels):
            if ch.label == label:
                return i
        raise KeyError(label)

    @classmethod
    def from_collected(cls, collected, gamma_R, gamma_r_prime=0.0):
        """Build from (label, rate) collected channels; the residual
        gamma_R - sum(rates) becomes one uncollected remainder channel."""
        chans = [Channel(label, g, "collected") for label, g in collected]
        residual = gamma_R - sum(g for _, g in collected)
        if residual < -_SUM_RULE_RTOL * max(gamma_R, 1.0):
            raise InvalidArgumentError(
                f"collected rates exceed gamma_R by {-residual:g} rad/s"
            )
        if residual > _SUM_RULE_RTOL * max(gamma_R, 1.0):
            chans.append(Channel(REMAINDER, residual, "uncollected"))
        return cls(channels=tuple(chans), gamma_r_prime=gamma_r_prime)

    @classmethod
    def bidirectional_gaussian(cls, gamma_mw_1, gamma_R, gamma_r_prime=0.0):
        """Default model: the 1D Gaussian continuum counts as two channels
        (forward, backward) of gamma_mw_1 each."""
        return cls.from_collected(
            [(FORWARD, gamma_mw_1), (BACKWARD, gamma_mw_1)], gamma_R, gamma_r_prime
        )

    @classmethod
    def single_direction(cls, gamma_mw_1, gamma_R, gamma_r_prime=0.0):
        """Literal single-channel reading of the Gaussian continuum; violates
        passivity at matched resonance (kept for comparison)."""
        return cls.from_collected([(FORWARD, gamma_mw_1)], gamma_R, gamma_r_prime)

    @classmethod
    def from_rates(cls, gammas, gamma_r_prime=0.0, kind="collected"):
        """All-explicit constructor: the given rates ARE the radiative set."""
        chans = tuple(
            Channel(f"channel_{i}", float(g), kind) for i, g in enumerate(gammas)
        )
        return cls(channels=chans, gamma_r_prime=gamma_r_prime)


@dataclass(frozen=True)
class Spectrum:
    """Complex response quantities sampled on a strictly increasing grid."""

    omega_grid: np.ndarray
    values: Dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        grid = np.asarray(self.omega_grid, dtype=float)
        if grid.size == 0:
            raise InvalidArgumentError("omega_grid must be non-empty")
        if grid.size > 1 and not np.all(np.diff(grid) > 0):
            raise InvalidArgumentError("omega_grid must be strictly increasing")
        for name, arr in self.values.items():
            if len(arr) != grid.size:
                raise InvalidArgumentError(f"quantity {name!r} length mismatch")


def _denominator(omega, omega_s, channels):
    d = -1j * (omega - omega_s) + channels.gamma_total
    if d == 0:
        raise SingularSystemError(
            "singular denominator: all decay rates zero at resonance"
        )
    return d


def steady_state_amplitude(omega, omega_s, channels: ChannelSet, inputs):
    """Steady-state super-atom amplitude S(omega) for the given drives."""
    inputs = np.asarray(inputs, dtype=complex)
    if inputs.shape != (len(channels.channels),):
        raise InvalidArgumentError("inputs must match the channel count")
    drive = np.sum(np.sqrt(2.0 * channels.rates) * inputs)
    return -1j * drive / _denominator(omega, omega_s, channels)


def output_fields(omega, omega_s, channels: ChannelSet, inputs):
    """Per-channel outputs b_p,out = b_p,in - i sqrt(2 gamma_p) S(omega)."""
    inputs = np.asarray(inputs, dtype=complex)
    s = steady_state_amplitude(omega, omega_s, channels, inputs)
    return inputs - 1j * np.sqrt(2.0 * channels.rates) * s


def scattering_matrix(omega, omega_s, channels: ChannelSet):
    """Full n x n complex scattering matrix at one frequency."""
    g = np.sqrt(channels.rates)
    d = _denominator(omega, omega_s, channels)
    return np.eye(len(g), dtype=complex) - 2.0 * np.outer(g, g) / d


def energy_residual(omega, channels: ChannelSet, inputs, omega_s=0.0):
    """Passivity check: (sum |out|^2 + 2 gamma_r_prime |S|^2 - sum |in|^2),
    normalized by the input power. Zero (to rounding) for the consistent model.
    """
    inputs = np.asarray(inputs, dtype=complex)
    p_in = float(np.sum(np.abs(inputs) ** 2))
    if p_in == 0.0:
        return 0.0
    s = steady_state_amplitude(omega, omega_s, channels, inputs)
    outs = inputs - 1j * np.sqrt(2.0 * channels.rates) * s
    p_out = float(np.sum(np.abs(outs) ** 2))
    absorbed = 2.0 * channels.gamma_r_prime * abs(s) ** 2
    return (p_out + absorbed - p_in) / p_in


def mw_spectrum(cfg: SystemConfig, channels: ChannelSet, omega_grid) -> Spectrum:
    """Reflection/transmission spectra for unit forward drive.

    t_mw is the forward-channel output; r_mw is the backward-channel output
    when one exists, else the literal single-channel reflectivity
    sqrt(2 gamma_1) S.
    """
    grid = np.asarray(omega_grid, dtype=float)
    fwd = channels.index_of(FORWARD)
    try:
        bwd = channels.index_of(BACKWARD)
    except KeyError:
        bwd = None

    n = len(channels.channels)
    inputs = np.zeros(n, dtype=complex)
    inputs[fwd] = 1.0

    s_arr = np.empty(grid.size, dtype=complex)
    r_arr = np.empty(grid.size, dtype=complex)
    t_arr = np.empty(grid.size, dtype=complex)
    g1 = channels.channels[fwd].gamma
    for i, omega in enumerate(grid):
        s = steady_state_amplitude(omega, cfg.omega_s, channels, inputs)
        outs = inputs - 1j * np.sqrt(2.0 * channels.rates) * s
        s_arr[i] = s
        t_arr[i] = outs[fwd]
        r_arr[i] = outs[bwd] if bwd is not None else np.sqrt(2.0 * g1) * s
    return Spectrum(omega_grid=grid, values={"S": s_arr, "r_mw": r_arr, "t_mw": t_arr})
