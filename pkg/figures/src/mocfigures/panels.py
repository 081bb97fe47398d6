"""Panel renderers.

Each panel reads CSVs with the exact headers published by the rydmoc CLI
and fails loudly on schema drift instead of mis-plotting.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class SchemaError(ValueError):
    """An input CSV does not carry the expected columns."""


@dataclass(frozen=True)
class FigureJob:
    inputs: List[str]
    panel: str  # "bound_vs_waist" | "eta_vs_N" | "eta_vs_delta"
    output: str
    log_x: Optional[bool] = None  # None = panel default


@dataclass(frozen=True)
class RenderInfo:
    """Facts about what was drawn, for callers and tests."""

    panel: str
    output: str
    curves: int
    details: Dict[str, float] = field(default_factory=dict)


def read_table(path, required):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file")
        rows = list(reader)
    for col in required:
        if col not in header:
            raise SchemaError(f"{path}: missing required column {col!r}")
    idx = {col: header.index(col) for col in header}
    out = {}
    for col in header:
        raw = [r[idx[col]] for r in rows]
        if col == "forbidden":
            out[col] = np.array([v == "true" for v in raw])
        else:
            out[col] = np.array([float(v) for v in raw])
    return out


def _render_bound_vs_waist(job: FigureJob) -> RenderInfo:
    if len(job.inputs) != 1:
        raise SchemaError("bound_vs_waist takes exactly one input CSV")
    data = read_table(job.inputs[0], ("waist_mw_m", "eta_bound", "forbidden"))
    waist = data["waist_mw_m"]
    bound = data["eta_bound"]
    forbidden = data["forbidden"]

    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.plot(waist * 1e3, bound, color="tab:blue", lw=1.8, label="efficiency bound")
    boundary = float("nan")
    if forbidden.any():
        allowed = waist[~forbidden]
        boundary = float(allowed.min()) if allowed.size else float(waist.max())
        ax.axvspan(waist.min() * 1e3, boundary * 1e3, color="0.8", zorder=0)
        ax.axvline(boundary * 1e3, color="0.5", lw=0.8, ls="--")
    ax.axhline(3.0 / 16.0, color="tab:red", lw=0.8, ls=":", label=r"$3/16$")
    ax.set_xlabel("microwave beam waist (mm)")
    ax.set_ylabel(r"optimal efficiency $\eta_{\mathrm{opt}}$")
    if job.log_x:
        ax.set_xscale("log")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(job.output, dpi=200)
    plt.close(fig)
    return RenderInfo(
        panel=job.panel,
        output=job.output,
        curves=1,
        details={"shade_boundary_waist_m": boundary},
    )


def _render_eta_vs_delta(job: FigureJob) -> RenderInfo:
    if not job.inputs:
        raise SchemaError("eta_vs_delta needs at least one input CSV")
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for path in job.inputs:
        data = read_table(path, ("delta_rad_per_s", "eta", "cooperativity"))
        delta = data["delta_rad_per_s"]
        center = int(np.argmin(np.abs(delta)))
        coop = data["cooperativity"][center]
        ax.plot(delta / (2 * np.pi * 1e9), data["eta"], lw=1.5, label=f"C = {coop:.3g}")
    ax.set_xlabel(r"detuning $\delta/2\pi$ (GHz)")
    ax.set_ylabel(r"conversion efficiency $\eta$")
    if job.log_x:
        ax.set_xscale("log")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(job.output, dpi=200)
    plt.close(fig)
    return RenderInfo(panel=job.panel, output=job.output, curves=len(job.inputs))


def _render_eta_vs_n(job: FigureJob) -> RenderInfo:
    if not job.inputs:
        raise SchemaError("eta_vs_N needs at least one input CSV")
    fig, ax = plt.subplots(figsize=(5, 3.6))
    peak_coops = []
    for path in job.inputs:
        data = read_table(path, ("atom_number_count", "eta", "cooperativity"))
        n = data["atom_number_count"]
        eta = data["eta"]
        i = int(np.nanargmax(eta))
        peak_coops.append(float(data["cooperativity"][i]))
        (line,) = ax.plot(n, eta, lw=1.5)
        ax.annotate(
            f"C = {data['cooperativity'][i]:.2f}",
            xy=(n[i], eta[i]),
            xytext=(0, 6),
            textcoords="offset points",
            ha="center",
            fontsize=8,
            color=line.get_color(),
        )
    ax.set_xlabel("atom number N")
    ax.set_ylabel(r"conversion efficiency $\eta$")
    if job.log_x is None or job.log_x:
        ax.set_xscale("log")
    fig.tight_layout()
    fig.savefig(job.output, dpi=200)
    plt.close(fig)
    details = {"peak_cooperativity": peak_coops[0]} if peak_coops else {}
    return RenderInfo(
        panel=job.panel, output=job.output, curves=len(job.inputs), details=details
    )


PANELS = {
    "bound_vs_waist": _render_bound_vs_waist,
    "eta_vs_delta": _render_eta_vs_delta,
    "eta_vs_N": _render_eta_vs_n,
}


def render(job: FigureJob) -> RenderInfo:
    """Render one panel to an image file; read-only over the inputs."""
    try:
        fn = PANELS[job.panel]
    except KeyError:
        raise SchemaError(f"unknown panel kind {job.panel!r}")
    return fn(job)
