"""Command-line entry point.

    bcsync analyze --input panel.csv --out results/ [--band 24:80] [--svg] [--figures]
    bcsync synth kuramoto --sectors 16 --months 240 --coupling 0.4 --out synth/
    bcsync synth slutsky --n 100 --window 10 --seed 7 --out slutsky/
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analytic_signal import BandSpec
from .ingest_io import PanelFormatError, parse_panel_csv, write_panel_csv, write_table_csv
from .pipeline import AnalysisConfig, analyze
from .report import write_report
from .synthgen import RNG_NAME, kuramoto_config, kuramoto_panel, slutsky_series


class UsageError(Exception):
    pass


def _band(text: str) -> BandSpec:
    try:
        return BandSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(kind):
    def conv(text):
        try:
            v = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid {kind.__name__} value {text!r}") from None
        if not (v > 0 and math.isfinite(v)):
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v

    return conv


def _non_negative(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return v


def _kick(text: str) -> tuple[float, float]:
    parts = text.split(":")
    try:
        t, delta = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"kick must look like T:DELTA, got {text!r}") from None
    return t, delta


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcsync", description="Synchronization analysis of sector panels")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a panel CSV")
    p.add_argument("--input", required=True, help="panel CSV (date,<id1>,...)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--band", type=_band, default=BandSpec(24.0, 80.0), help="period band MIN:MAX in months (default 24:80)")
    p.add_argument("--lock-threshold", type=_positive(float), default=0.1)
    p.add_argument("--lock-fraction", type=_positive(float), default=0.9)
    p.add_argument("--significance", type=float, choices=(0.01, 0.05, 0.10), default=0.05)
    p.add_argument("--svg", action="store_true", help="also write SVG charts")
    p.add_argument("--figures", action="store_true", help="also write matplotlib PNG figures")
    p.set_defaults(func=cmd_analyze)

    synth = sub.add_parser("synth", help="generate synthetic data")
    ssub = synth.add_subparsers(dest="generator", required=True)

    k = ssub.add_parser("kuramoto", help="coupled phase-oscillator panel")
    k.add_argument("--sectors", type=_positive(int), default=16)
    k.add_argument("--months", type=_positive(int), default=240)
    k.add_argument("--coupling", type=_non_negative, default=0.0, help="K in rad/month")
    k.add_argument("--freq-spread", type=_non_negative, default=0.3,
                   help="std of natural frequencies as a fraction of their mean")
    k.add_argument("--center-period", type=_positive(float), default=48.0, help="mean natural period, months")
    k.add_argument("--noise", type=_non_negative, default=0.0, help="phase noise, rad/sqrt(month)")
    k.add_argument("--kick", type=_kick, action="append", default=[], metavar="T:DELTA",
                   help="common phase kick at month T (repeatable)")
    k.add_argument("--steps-per-month", type=_positive(int), default=10)
    k.add_argument("--burn-in", type=int, default=0, help="months integrated and discarded before month 0")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--start", default="1988-01", help="first month, YYYY-MM")
    k.add_argument("--out", required=True, help="output directory")
    k.set_defaults(func=cmd_synth_kuramoto)

    s = ssub.add_parser("slutsky", help="moving sum of uniform random numbers")
    s.add_argument("--n", type=_positive(int), default=100)
    s.add_argument("--window", type=_positive(int), default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_synth_slutsky)
    return parser


def _out_dir(path: str) -> Path:
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create output directory {path}: {exc.strerror}") from None
    if not out.is_dir():
        raise UsageError(f"{path} is not a directory")
    return out


def cmd_analyze(args) -> int:
    if args.lock_fraction > 1:
        raise UsageError("--lock-fraction must be <= 1")
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    panel = parse_panel_csv(text)
    cfg = AnalysisConfig(args.band, args.significance, args.lock_threshold, args.lock_fraction)
    out = _out_dir(args.out)
    report = analyze(panel, cfg)
    write_report(report, out, svg=args.svg, figures=args.figures)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    ls = report.lock_summary
    print(f"partial phase locking: {'yes' if ls.is_partially_locked else 'no'}, fraction={ls.fraction_below:.4f}")
    if report.entrainment is not None:
        print(f"relative omega spread: {report.entrainment.relative_spread:.6g}")
    return 0


def _write_meta(path: Path, items: list[tuple[str, object]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for key, value in items:
            fh.write(f"{key} = {value}\n")


def cmd_synth_kuramoto(args) -> int:
    if args.burn_in < 0:
        raise UsageError("--burn-in must be >= 0")
    cfg = kuramoto_config(
        args.sectors,
        args.months,
        center_period=args.center_period,
        freq_spread=args.freq_spread,
        coupling=args.coupling,
        noise=args.noise,
        kicks=args.kick,
        steps_per_month=args.steps_per_month,
        burn_in_months=args.burn_in,
        seed=args.seed,
        start_date=args.start,
    )
    run = kuramoto_panel(cfg)
    out = _out_dir(args.out)
    with open(out / "panel.csv", "w", encoding="utf-8", newline="\n") as fh:
        write_panel_csv(run.panel, fh)
    _write_meta(out / "meta.txt", [
        ("generator", "kuramoto"),
        ("rng", RNG_NAME),
        ("seed", args.seed),
        ("sectors", args.sectors),
        ("months", args.months),
        ("coupling", repr(cfg.coupling)),
        ("freq_spread", repr(args.freq_spread)),
        ("center_period", repr(args.center_period)),
        ("noise_std", repr(args.noise)),
        ("kicks", " ".join(f"{t!r}:{d!r}" for t, d in cfg.common_kicks) or "none"),
        ("dt", repr(cfg.dt)),
        ("n_steps", cfg.n_steps),
        ("burn_in_steps", cfg.burn_in_steps),
        ("start", args.start),
        ("natural_frequencies", " ".join(repr(float(w)) for w in cfg.natural_frequencies)),
        ("returns", "cos(theta(month)), levels start at 100"),
    ])
    print(f"wrote {out / 'panel.csv'} ({run.panel.n_sectors} sectors x {run.panel.n_months} months)")
    return 0


def cmd_synth_slutsky(args) -> int:
    if args.window > args.n:
        raise UsageError("--window must not exceed --n")
    series = slutsky_series(args.n, args.window, args.seed)
    out = _out_dir(args.out)
    with open(out / "series.csv", "w", encoding="utf-8", newline="\n") as fh:
        write_table_csv(["t", "value"], [np.arange(args.n), series], fh)
    _write_meta(out / "meta.txt", [
        ("generator", "slutsky"),
        ("rng", RNG_NAME),
        ("seed", args.seed),
        ("n", args.n),
        ("window", args.window),
        ("draws", "uniform(0, 1)"),
    ])
    print(f"wrote {out / 'series.csv'} ({args.n} samples)")
    return 0


def main(argv=None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PanelFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
