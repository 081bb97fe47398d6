"""Free-space microwave-to-optical conversion in Rydberg atomic ensembles."""

__version__ = "0.1.0"

from .conversion import (
    BoundResult,
    ConversionResult,
    OperatingPoint,
    bandwidth_fwhm,
    cooperativity,
    efficiency_closed_form,
    efficiency_numeric,
    efficiency_upper_bound,
    optimal_operating_point,
)
from .errors import ConfigError, InvalidArgumentError, SingularSystemError
from .model import (
    Check,
    RateSet,
    RegimeThresholds,
    SystemConfig,
    ValidationReport,
    validate_regime,
)
from .rates import (
    OpticalDepthModel,
    build_rate_set,
    collective_mw_decay,
    diffraction_limited_waist,
    gaussian_channel_rate,
    mean_optical_depth,
    optical_channel_rate,
)
from .scattering import (
    Channel,
    ChannelSet,
    Spectrum,
    energy_residual,
    mw_spectrum,
    output_fields,
    scattering_matrix,
    steady_state_amplitude,
)
from .sweep import (
    BoundCurve,
    MaximizeResult,
    ScanResult,
    SweepSpec,
    bound_curve,
    maximize_over_axis,
    run_sweep,
)
from .units import angular_from_hz, hz_from_angular

__all__ = [
    "__version__",
    "angular_from_hz",
    "hz_from_angular",
    "SystemConfig",
    "RateSet",
    "RegimeThresholds",
    "Check",
    "ValidationReport",
    "validate_regime",
    "OpticalDepthModel",
    "collective_mw_decay",
    "gaussian_channel_rate",
    "diffraction_limited_waist",
    "mean_optical_depth",
    "optical_channel_rate",
    "build_rate_set",
    "Channel",
    "ChannelSet",
    "Spectrum",
    "steady_state_amplitude",
    "output_fields",
    "scattering_matrix",
    "energy_residual",
    "mw_spectrum",
    "ConversionResult",
    "BoundResult",
    "OperatingPoint",
    "cooperativity",
    "bandwidth_fwhm",
    "efficiency_closed_form",
    "efficiency_numeric",
    "efficiency_upper_bound",
    "optimal_operating_point",
    "SweepSpec",
    "ScanResult",
    "BoundCurve",
    "MaximizeResult",
    "run_sweep",
    "maximize_over_axis",
    "bound_curve",
    "InvalidArgumentError",
    "SingularSystemError",
    "ConfigError",
]
