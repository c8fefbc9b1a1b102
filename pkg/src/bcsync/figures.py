"""Matplotlib versions of the report charts (PNG, one multi-panel figure per type)."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .pipeline import AnalysisReport  # noqa: E402

RC = {
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.fontsize": "small",
    "savefig.dpi": 120,
    "svg.hashsalt": "bcsync",
}


def _grid(n: int) -> tuple[int, int]:
    cols = min(4, n)
    return math.ceil(n / cols), cols


def _per_sector(report: AnalysisReport, path: Path, xy, xlabel: str, ylabel: str, title: str) -> Path:
    rows, cols = _grid(report.n_sectors)
    fig, axes = plt.subplots(rows, cols, figsize=(2.6 * cols, 2.2 * rows), squeeze=False)
    for k, ax in enumerate(axes.flat):
        if k >= report.n_sectors:
            ax.set_visible(False)
            continue
        x, y = xy(report.analytic[k])
        ax.plot(x, y, lw=0.8)
        ax.set_title(report.sector_ids[k])
    for ax in axes[-1]:
        ax.set_xlabel(xlabel)
    for ax in axes[:, 0]:
        ax.set_ylabel(ylabel)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _single(path: Path, t, series: dict, ylabel: str, title: str, legend: bool = False) -> Path:
    fig, ax = plt.subplots(figsize=(6, 3.2))
    for name, y in series.items():
        ax.plot(t, y, lw=0.9, label=name)
    ax.set_xlabel("month")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if legend:
        ax.legend(ncol=2, loc="best")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def write_figures(report: AnalysisReport, out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    band = str(report.config.band)
    t = np.arange(len(report.dates))
    written = []
    with plt.rc_context(RC):
        written.append(_per_sector(
            report, out_dir / "fig_trajectories.png", lambda a: (a.x, a.y), "x", "H[x]",
            f"Complex-plane trajectories, {band} months",
        ))
        written.append(_per_sector(
            report, out_dir / "fig_phases.png", lambda a: (t, a.phase_unwrapped), "month", "phase [rad]",
            f"Unwrapped phase, {band} months",
        ))

        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.bar(np.arange(report.n_sectors), [f.omega for f in report.fits])
        ax.set_xticks(np.arange(report.n_sectors), report.sector_ids, rotation=60)
        ax.set_ylabel("omega [rad/month]")
        ax.set_title(f"Fitted angular frequency, {band} months")
        fig.tight_layout()
        path = out_dir / "fig_omega.png"
        fig.savefig(path)
        plt.close(fig)
        written.append(path)

        sh = report.shocks
        written.append(_single(out_dir / "fig_sigma.png", t, {"sigma": report.lock.sigma},
                               "sigma [rad/month]", f"Phase-lock indicator, {band} months"))
        written.append(_single(out_dir / "fig_amplitude.png", t, {"<A>": sh.mean_amplitude},
                               "<A>", f"Mean amplitude, {band} months"))
        written.append(_single(out_dir / "fig_common_shock.png", t, {"<cos theta>": sh.common_shock},
                               "<cos theta>", f"Common shock, {band} months"))
        written.append(_single(
            out_dir / "fig_individual_shocks.png", t, dict(zip(report.sector_ids, sh.individual)),
            "cos theta_i - <cos theta>", f"Individual shocks, {band} months",
        ))
    return written
