"""Command-line surface.

Subcommands map 1:1 to library operations. Data goes to ``--out`` (default
stdout) as CSV or JSON; diagnostics go to stderr. Exit codes: 0 success,
1 validation/config failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__, io
from .conversion import efficiency_closed_form, efficiency_upper_bound
from .errors import ConfigError, InvalidArgumentError, SingularSystemError
from .model import validate_regime
from .rates import build_rate_set
from .scattering import ChannelSet, mw_spectrum
from .sweep import (
    AXIS_COLUMN,
    AXIS_UNITS,
    SweepSpec,
    bound_curve,
    maximize_over_axis,
    run_sweep,
)
from .units import angular_from_hz


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rydmoc",
        description="Free-space microwave-to-optical conversion model",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config=True):
        if config:
            p.add_argument("--config", required=True, help="JSON config file")
            p.add_argument(
                "--lenient",
                action="store_true",
                help="warn instead of failing on unknown config keys",
            )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("rates", help="derived collective rates")
    add_common(p)

    p = sub.add_parser("bound", help="diffraction-limited efficiency bound")
    p.add_argument("--lambda-mw", type=float, required=True, help="microwave wavelength (m)")
    p.add_argument("--waist", type=float, help="single waist value (m)")
    p.add_argument("--waist-min", type=float, help="curve: smallest waist (m)")
    p.add_argument("--waist-max", type=float, help="curve: largest waist (m)")
    p.add_argument("--points", type=int, default=200)
    add_common(p, config=False)

    p = sub.add_parser("efficiency", help="conversion efficiency at one detuning")
    p.add_argument("--delta-hz", type=float, default=None, help="optical detuning (Hz)")
    add_common(p)

    p = sub.add_parser("spectrum", help="microwave reflection/transmission spectrum")
    p.add_argument("--delta-min-hz", type=float, required=True)
    p.add_argument("--delta-max-hz", type=float, required=True)
    p.add_argument("--points", type=int, default=401)
    p.add_argument(
        "--channel-model",
        choices=("bidirectional", "single"),
        default="bidirectional",
    )
    add_common(p)

    p = sub.add_parser("sweep", help="one-parameter sweep of the conversion model")
    p.add_argument("--axis", choices=sorted(AXIS_UNITS), required=True)
    p.add_argument("--min", type=float, required=True, dest="minimum")
    p.add_argument("--max", type=float, required=True, dest="maximum")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--log", action="store_true", help="logarithmic spacing")
    add_common(p)

    p = sub.add_parser("optimize", help="maximize eta over one axis")
    p.add_argument("--axis", choices=sorted(AXIS_UNITS), required=True)
    p.add_argument("--min", type=float, required=True, dest="minimum")
    p.add_argument("--max", type=float, required=True, dest="maximum")
    p.add_argument("--log", action="store_true")
    p.add_argument("--tol", type=float, default=1e-6)
    add_common(p)

    p = sub.add_parser("validate", help="physical-regime checks")
    add_common(p)

    return parser


def _emit(table, args, argv, raw_config=None):
    write = io.write_csv if args.format == "csv" else io.write_json
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write(table, fh)
        manifest = io.build_manifest(
            command="rydmoc " + " ".join(argv),
            output_paths=[args.out],
            raw_config=raw_config,
        )
        io.write_manifest(manifest, args.out + ".manifest.json")
    else:
        write(table, sys.stdout)


def _load(args):
    raw = io.load_config_dict(args.config)
    cfg = io.config_from_dict(raw, lenient=args.lenient)
    return raw, cfg


def _run(args, argv):
    if args.command == "rates":
        raw, cfg = _load(args)
        _emit(io.rates_table(build_rate_set(cfg)), args, argv, raw)
        return 0

    if args.command == "bound":
        if args.waist is not None:
            res = efficiency_upper_bound(args.lambda_mw, args.waist)
            table = io.Table(
                columns=["waist_mw_m", "eta_bound", "forbidden"],
                rows=[[args.waist, res.eta_bound, res.forbidden]],
            )
        elif args.waist_min is not None and args.waist_max is not None:
            curve = bound_curve(
                args.lambda_mw, (args.waist_min, args.waist_max), args.points
            )
            table = io.bound_table(curve)
        else:
            print(
                "error: bound requires --waist or --waist-min/--waist-max",
                file=sys.stderr,
            )
            return 2
        _emit(table, args, argv)
        return 0

    if args.command == "efficiency":
        raw, cfg = _load(args)
        delta = (
            angular_from_hz(args.delta_hz) if args.delta_hz is not None else cfg.detuning
        )
        res = efficiency_closed_form(delta, cfg.rabi_drive, build_rate_set(cfg))
        _emit(io.efficiency_table(delta, res), args, argv, raw)
        return 0

    if args.command == "spectrum":
        raw, cfg = _load(args)
        rates = build_rate_set(cfg)
        maker = (
            ChannelSet.bidirectional_gaussian
            if args.channel_model == "bidirectional"
            else ChannelSet.single_direction
        )
        channels = maker(rates.gamma_mw_1, rates.gamma_R, rates.gamma_r_prime)
        grid = cfg.omega_s + np.linspace(
            angular_from_hz(args.delta_min_hz),
            angular_from_hz(args.delta_max_hz),
            args.points,
        )
        _emit(io.spectrum_table(mw_spectrum(cfg, channels, grid)), args, argv, raw)
        return 0

    if args.command == "sweep":
        raw, cfg = _load(args)
        spec = SweepSpec(
            axis=args.axis,
            minimum=args.minimum,
            maximum=args.maximum,
            points=args.points,
            spacing="logarithmic" if args.log else "linear",
            base_config=cfg,
        )
        _emit(io.scan_table(run_sweep(spec)), args, argv, raw)
        return 0

    if args.command == "optimize":
        raw, cfg = _load(args)
        spec = SweepSpec(
            axis=args.axis,
            minimum=args.minimum,
            maximum=args.maximum,
            points=64,
            spacing="logarithmic" if args.log else "linear",
            base_config=cfg,
        )
        res = maximize_over_axis(spec, tol=args.tol)
        axis_col = f"{AXIS_COLUMN[args.axis]}_{AXIS_UNITS[args.axis]}"
        table = io.Table(
            columns=[axis_col, "eta", "boundary", "multimodal"],
            rows=[[res.axis_value, res.eta, res.boundary, res.multimodal]],
        )
        _emit(table, args, argv, raw)
        return 0

    if args.command == "validate":
        raw, cfg = _load(args)
        report = validate_regime(cfg)
        _emit(io.report_table(report), args, argv, raw)
        return 1 if report.has_failures else 0

    raise AssertionError(f"unhandled command {args.command!r}")


def run_cli(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, argv)
    except (ConfigError, InvalidArgumentError, SingularSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run_cli(sys.argv[1:])
