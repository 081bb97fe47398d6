import pytest

from rydmoc import SystemConfig, angular_from_hz


@pytest.fixture
def base_config():
    """Reference scenario: mm-wave beam at its own waist, cold Rb-style optics."""
    return SystemConfig(
        lambda_mw=7.0e-3,
        lambda_opt=780e-9,
        waist_mw=7.0e-3,
        waist_cloud_transverse=66e-6,
        sigma_cloud_longitudinal=2.0e-4,
        ensemble_length=5.0e-4,
        atom_number=1.0e6,
        gamma_gr=angular_from_hz(10.0),
        gamma_e=angular_from_hz(6.07e6),
        gamma_r_prime=angular_from_hz(100.0),
        kappa_opt_0=angular_from_hz(1000.0),
        rabi_drive=angular_from_hz(2.0e7),
        detuning=0.0,
    )
