"""figures <panel> --in PATH [--in PATH ...] --out PATH"""

from __future__ import annotations

import argparse
import sys

from .panels import PANELS, FigureJob, SchemaError, render


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="figures", description="Render conversion-model CSVs to static plots"
    )
    parser.add_argument("panel", choices=sorted(PANELS))
    parser.add_argument(
        "--in",
        dest="inputs",
        action="append",
        required=True,
        metavar="PATH",
        help="input CSV (repeatable)",
    )
    parser.add_argument("--out", required=True, help="output image path")
    scale = parser.add_mutually_exclusive_group()
    scale.add_argument("--log-x", dest="log_x", action="store_true", default=None)
    scale.add_argument("--linear-x", dest="log_x", action="store_false")
    return parser


def run_cli(argv) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    job = FigureJob(inputs=args.inputs, panel=args.panel, output=args.out, log_x=args.log_x)
    try:
        info = render(job)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {info.output} ({info.curves} curve(s))", file=sys.stderr)
    return 0


def main() -> int:
    return run_cli(sys.argv[1:])
