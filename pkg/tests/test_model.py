import pytest

from rydmoc import InvalidArgumentError, RegimeThresholds, validate_regime


def all_statuses(report):
    return {c.name: c.status for c in report.checks}


def test_reference_scenario_all_pass(base_config):
    statuses = all_statuses(validate_regime(base_config))
    assert set(statuses.values()) == {"pass"}


def test_sub_diffraction_waist_fails(base_config):
    cfg = base_config.replace(waist_mw=base_config.lambda_mw / 10.0)
    report = validate_regime(cfg)
    assert report["diffraction_limit"].status == "fail"
    assert report.has_failures


def test_small_atom_number_warns(base_config):
    cfg = base_config.replace(atom_number=1)
    report = validate_regime(cfg)
    assert report["atom_number"].status == "warn"


def test_scale_separation_warns(base_config):
    cfg = base_config.replace(ensemble_length=base_config.lambda_mw / 2.0)
    report = validate_regime(cfg)
    assert report["mw_wavelength_vs_ensemble"].status == "warn"


def test_low_od_warns(base_config):
    cfg = base_config.replace(od_mean_override=0.1)
    report = validate_regime(cfg)
    assert report["optical_depth"].status == "warn"


def test_thresholds_configurable(base_config):
    strict = RegimeThresholds(scale_ratio=1000.0)
    report = validate_regime(base_config, strict)
    assert report["mw_wavelength_vs_ensemble"].status == "warn"


def test_every_check_appears_once(base_config):
    names = [c.name for c in validate_regime(base_config).checks]
    assert len(names) == len(set(names)) == 5


def test_pure(base_config):
    assert validate_regime(base_config) == validate_regime(base_config)


def test_invalid_config_rejected(base_config):
    with pytest.raises(InvalidArgumentError):
        base_config.replace(waist_mw=0.0)
    with pytest.raises(InvalidArgumentError):
        base_config.replace(atom_number=0.5)
    with pytest.raises(InvalidArgumentError):
        base_config.replace(gamma_gr=-1.0)


def test_degenerate_zero_rates_allowed(base_config):
    cfg = base_config.replace(gamma_r_prime=0.0, kappa_opt_0=0.0, rabi_drive=0.0)
    assert not validate_regime(cfg).has_failures
