"""Frequency conventions.

All internal math uses angular frequencies (rad/s). Ordinary frequencies
(Hz) only appear at I/O boundaries, always with an explicit ``_hz`` suffix.
"""

import math

from .errors import InvalidArgumentError

TWO_PI = 2.0 * math.pi


def angular_from_hz(f):
    """Ordinary frequency (Hz) -> angular frequency (rad/s)."""
    if not math.isfinite(f):
        raise InvalidArgumentError(f"frequency must be finite, got {f!r}")
    return TWO_PI * f


def hz_from_angular(omega):
    """Angular frequency (rad/s) -> ordinary frequency (Hz)."""
    if not math.isfinite(omega):
        raise InvalidArgumentError(f"angular frequency must be finite, got {omega!r}")
    return omega / TWO_PI
