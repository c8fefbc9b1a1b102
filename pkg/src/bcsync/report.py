"""Write an :class:`AnalysisReport` to a directory of CSV tables, a summary and charts."""

from __future__ import annotations

import math
import os
from pathlib import Path

import numpy as np

from .ingest_io import write_table_csv
from .pipeline import AnalysisReport
from .svg import ChartSpec, render_svg

CSV_FILES = (
    "frequencies.csv",
    "lock.csv",
    "shocks_common.csv",
    "shocks_individual.csv",
    "shocks_dispersion.csv",
    "stationarity.csv",
)


def _write(path: Path, writer) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer(fh)


def write_tables(report: AnalysisReport, out_dir: Path) -> list[Path]:
    out_dir = Path(out_dir)
    written = []
    t = np.arange(len(report.dates), dtype=float)

    def table(name, names, cols):
        path = out_dir / name
        _write(path, lambda fh: write_table_csv(names, cols, fh))
        written.append(path)

    table(
        "frequencies.csv",
        ["sector", "omega", "intercept", "rms_residual"],
        [
            list(report.sector_ids),
            [f.omega for f in report.fits],
            [f.intercept for f in report.fits],
            [f.rms_residual for f in report.fits],
        ],
    )
    table("lock.csv", ["t", "mu", "sigma", "lock_ratio"], [t, report.lock.mu, report.lock.sigma, report.lock.lock_ratio])
    sh = report.shocks
    table("shocks_common.csv", ["t", "mean_amplitude", "common_shock"], [t, sh.mean_amplitude, sh.common_shock])
    table("shocks_individual.csv", ["t", *report.sector_ids], [t, *sh.individual])
    table("shocks_dispersion.csv", ["t", "dispersion"], [t, sh.dispersion])

    rows = [r for r in report.stationarity]
    table(
        "stationarity.csv",
        ["sector", "statistic", "critical_value", "significance", "reject_unit_root"],
        [
            list(report.sector_ids),
            [r.statistic if r else math.nan for r in rows],
            [r.critical_value if r else math.nan for r in rows],
            [report.config.significance] * len(rows),
            [int(r.reject_unit_root) if r else -1 for r in rows],
        ],
    )
    return written


def summary_text(report: AnalysisReport) -> str:
    ls = report.lock_summary
    cfg = report.config
    lines = [
        f"partial phase locking: {'yes' if ls.is_partially_locked else 'no'}, "
        f"fraction={ls.fraction_below:.4f} (lock_ratio < {ls.threshold:g} required on >= {ls.required_fraction:g})",
    ]
    if report.entrainment is not None:
        e = report.entrainment
        lines.append(
            f"frequency entrainment: mean_omega={e.mean_omega:.6g} rad/month, std_omega={e.std_omega:.6g}, "
            f"relative_spread={e.relative_spread:.6g}"
        )
    else:
        lines.append("frequency entrainment: undefined (single sector)")
    lines.append(f"mean sigma={float(np.mean(report.lock.sigma)):.6g} rad/month")
    lines.append(f"mean individual-shock dispersion={float(np.mean(report.shocks.dispersion)):.6g}")
    n_reject = sum(1 for r in report.stationarity if r is not None and r.reject_unit_root)
    lines.append(f"unit root rejected for {n_reject}/{report.n_sectors} sectors at {cfg.significance:g}")
    lines.append(f"sectors={report.n_sectors} samples={len(report.dates)} ({report.dates[0]}..{report.dates[-1]})")
    lines.append(f"band={cfg.band} months lock_threshold={cfg.lock_threshold:g} lock_fraction={cfg.lock_fraction:g}")
    lines.append(f"input_sha256={report.input_digest}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def chart_specs(report: AnalysisReport) -> list[ChartSpec]:
    """Charts mirroring the figure types: trajectories, phases, omegas, sigma, shocks."""
    t = list(range(len(report.dates)))
    ids = report.sector_ids
    band = str(report.config.band)
    specs = []
    for sid, a in zip(ids, report.analytic):
        specs.append(
            ChartSpec(f"Trajectory {sid} ({band} months)", "x", "H[x]", a.x, {sid: a.y}, f"trajectory_{sid}.svg")
        )
    specs.append(
        ChartSpec(
            f"Unwrapped phase ({band} months)", "month", "phase [rad]", t,
            {sid: a.phase_unwrapped for sid, a in zip(ids, report.analytic)}, "phase.svg",
        )
    )
    specs.append(
        ChartSpec(
            f"Fitted angular frequency ({band} months)", "sector", "omega [rad/month]",
            list(range(1, len(ids) + 1)), {"omega": [f.omega for f in report.fits]}, "omega.svg",
            style="bar", category_labels=ids,
        )
    )
    specs.append(ChartSpec(f"Phase-lock indicator ({band} months)", "month", "sigma [rad/month]", t,
                           {"sigma": report.lock.sigma}, "sigma.svg"))
    specs.append(ChartSpec(f"Mean amplitude ({band} months)", "month", "<A>", t,
                           {"mean amplitude": report.shocks.mean_amplitude}, "amplitude.svg"))
    specs.append(ChartSpec(f"Common shock ({band} months)", "month", "<cos theta>", t,
                           {"common shock": report.shocks.common_shock}, "common_shock.svg"))
    specs.append(
        ChartSpec(
            f"Individual shocks ({band} months)", "month", "cos theta_i - <cos theta>", t,
            {sid: row for sid, row in zip(ids, report.shocks.individual)}, "individual_shocks.svg",
        )
    )
    return specs


def write_svgs(report: AnalysisReport, out_dir: Path) -> list[Path]:
    written = []
    for spec in chart_specs(report):
        path = Path(out_dir) / os.path.basename(spec.path)
        _write(path, lambda fh, s=spec: fh.write(render_svg(s)))
        written.append(path)
    return written


def write_report(report: AnalysisReport, out_dir, svg: bool = False, figures: bool = False) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = write_tables(report, out_dir)
    path = out_dir / "summary.txt"
    _write(path, lambda fh: fh.write(summary_text(report)))
    written.append(path)
    if svg:
        written += write_svgs(report, out_dir)
    if figures:
        from .figures import write_figures

        written += write_figures(report, out_dir)
    return written
