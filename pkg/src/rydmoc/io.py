"""Configuration ingestion and CSV/JSON emission.

Config files are JSON objects; every frequency key carries a ``_hz`` suffix
and is converted to angular units at this boundary. CSV numbers are written
as shortest round-trip decimals so re-parsing reproduces them bit-exactly.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import List

import numpy as np

from . import __version__
from .errors import ConfigError
from .model import SystemConfig, ValidationReport
from .scattering import Spectrum
from .sweep import AXIS_COLUMN, AXIS_UNITS, BoundCurve, ScanResult
from .units import angular_from_hz

# config key -> (SystemConfig field, converts ordinary Hz to rad/s)
_REQUIRED_KEYS = {
    "lambda_mw_m": ("lambda_mw", False),
    "lambda_opt_m": ("lambda_opt", False),
    "waist_mw_m": ("waist_mw", False),
    "waist_cloud_transverse_m": ("waist_cloud_transverse", False),
    "sigma_cloud_longitudinal_m": ("sigma_cloud_longitudinal", False),
    "ensemble_length_m": ("ensemble_length", False),
    "atom_number": ("atom_number", False),
    "gamma_gr_hz": ("gamma_gr", True),
    "gamma_e_hz": ("gamma_e", True),
    "gamma_r_prime_hz": ("gamma_r_prime", True),
    "kappa_opt_0_hz": ("kappa_opt_0", True),
    "rabi_drive_hz": ("rabi_drive", True),
    "detuning_hz": ("detuning", True),
}

_OPTIONAL_KEYS = {
    "omega_s_hz": ("omega_s", True),
    "od_mean_override": ("od_mean_override", False),
    "hold_gamma_r_prime": ("hold_gamma_r_prime", False),
    "hold_kappa_opt_0": ("hold_kappa_opt_0", False),
}


def _reject_duplicates(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ConfigError(f"duplicate key {key!r} in config")
        seen.add(key)
    return dict(pairs)


def load_config_dict(path):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh, object_pairs_hook=_reject_duplicates)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {path}: {exc}")
    if not isinstance(raw, dict):
        raise ConfigError(f"config must be a JSON object: {path}")
    return raw


def config_from_dict(raw, lenient=False) -> SystemConfig:
    kwargs = {}
    for key, (field, is_hz) in _REQUIRED_KEYS.items():
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
        kwargs[field] = _number(key, raw[key], is_hz)
    for key, (field, is_hz) in _OPTIONAL_KEYS.items():
        if key not in raw:
            continue
        if field.startswith("hold_"):
            if not isinstance(raw[key], bool):
                raise ConfigError(f"key {key!r} must be a boolean")
            kwargs[field] = raw[key]
        else:
            kwargs[field] = _number(key, raw[key], is_hz)
    unknown = set(raw) - set(_REQUIRED_KEYS) - set(_OPTIONAL_KEYS)
    if unknown:
        msg = f"unknown config keys: {sorted(unknown)}"
        if lenient:
            print(f"warning: {msg}", file=sys.stderr)
        else:
            raise ConfigError(msg)
    try:
        return SystemConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _number(key, value, is_hz):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"key {key!r} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ConfigError(f"key {key!r} must be finite, got {value!r}")
    return angular_from_hz(v) if is_hz else v


def parse_config(path, lenient=False) -> SystemConfig:
    """Load and validate one JSON config file."""
    return config_from_dict(load_config_dict(path), lenient=lenient)


def config_digest(raw) -> str:
    """Content hash of a config dict, stable under key order and whitespace."""
    canonical = json.dumps(raw, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Table:
    """Column-ordered tabular payload shared by the CSV and JSON writers."""

    columns: List[str]
    rows: List[list]


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))  # shortest round-trip decimal
    return str(value)


def write_csv(table: Table, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])


def _json_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return v if math.isfinite(v) else None
    return value


def write_json(table: Table, stream):
    rows = [
        {c: _json_cell(v) for c, v in zip(table.columns, row)} for row in table.rows
    ]
    json.dump(rows, stream, indent=2)
    stream.write("\n")


def scan_table(result: ScanResult) -> Table:
    axis_col = f"{AXIS_COLUMN[result.axis]}_{result.unit}"
    columns = [
        axis_col,
        "eta",
        "cooperativity",
        "fwhm_rad_per_s",
        "extraction_mw",
        "extraction_opt",
    ]
    rows = [
        [
            result.values[i],
            result.eta[i],
            result.cooperativity[i],
            result.fwhm[i],
            result.extraction_mw[i],
            result.extraction_opt[i],
        ]
        for i in range(result.values.size)
    ]
    return Table(columns=columns, rows=rows)


def bound_table(curve: BoundCurve) -> Table:
    columns = ["waist_mw_m", "eta_bound", "forbidden"]
    rows = [
        [curve.waist[i], curve.eta_bound[i], bool(curve.forbidden[i])]
        for i in range(curve.waist.size)
    ]
    return Table(columns=columns, rows=rows)


def spectrum_table(spectrum: Spectrum) -> Table:
    columns = ["omega_rad_per_s"]
    for name in spectrum.values:
        columns += [f"{name}_re", f"{name}_im"]
    rows = []
    for i in range(spectrum.omega_grid.size):
        row = [spectrum.omega_grid[i]]
        for arr in spectrum.values.values():
            row += [arr[i].real, arr[i].imag]
        rows.append(row)
    return Table(columns=columns, rows=rows)


def rates_table(rates) -> Table:
    columns = [
        "gamma_R_rad_per_s",
        "gamma_mw_1_rad_per_s",
        "gamma_r_prime_rad_per_s",
        "kappa_opt_1_rad_per_s",
        "kappa_opt_0_rad_per_s",
        "gamma_mw_total_rad_per_s",
        "kappa_opt_total_rad_per_s",
        "extraction_mw",
        "extraction_opt",
        "od_mean",
    ]
    row = [
        rates.gamma_R,
        rates.gamma_mw_1,
        rates.gamma_r_prime,
        rates.kappa_opt_1,
        rates.kappa_opt_0,
        rates.gamma_mw_total,
        rates.kappa_opt_total,
        rates.extraction_mw,
        rates.extraction_opt,
        rates.od_mean,
    ]
    return Table(columns=columns, rows=[row])


def efficiency_table(delta, result) -> Table:
    columns = [
        "delta_rad_per_s",
        "eta",
        "cooperativity",
        "fwhm_rad_per_s",
        "extraction_mw",
        "extraction_opt",
    ]
    row = [
        delta,
        result.eta,
        result.cooperativity,
        result.fwhm,
        result.extraction_mw,
        result.extraction_opt,
    ]
    return Table(columns=columns, rows=[row])


def report_table(report: ValidationReport) -> Table:
    return Table(
        columns=["check", "status", "message"],
        rows=[[c.name, c.status, c.message] for c in report.checks],
    )


@dataclass(frozen=True)
class RunManifest:
    tool_version: str
    config_digest: str
    command: str
    timestamp: str
    output_paths: List[str]


def build_manifest(command, output_paths, raw_config=None) -> RunManifest:
    return RunManifest(
        tool_version=__version__,
        config_digest=config_digest(raw_config) if raw_config is not None else "",
        command=command,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        output_paths=list(output_paths),
    )


def write_manifest(manifest: RunManifest, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dataclasses.asdict(manifest), fh, indent=2)
        fh.write("\n")
