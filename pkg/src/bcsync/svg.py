"""Minimal, deterministic SVG line and bar charts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 720, 440
LEFT, RIGHT, TOP, BOTTOM = 70, 150, 40, 50
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
)


@dataclass(frozen=True)
class ChartSpec:
    """One chart: shared ``x`` and one or more named ``series``.

    ``style`` is ``"line"`` (one polyline per series) or ``"bar"`` (one
    rectangle per x value, first series only).
    """

    title: str
    x_label: str
    y_label: str
    x: Sequence[float]
    series: Mapping[str, Sequence[float]]
    path: str = ""
    style: str = "line"
    category_labels: Sequence[str] = field(default=())

    def __post_init__(self):
        if not self.series:
            raise ValueError("chart needs at least one series")
        n = len(self.x)
        if n == 0:
            raise ValueError("chart series are empty")
        for name, values in self.series.items():
            if len(values) != n:
                raise ValueError(f"series {name!r} has {len(values)} points, x has {n}")
        if self.style not in ("line", "bar"):
            raise ValueError(f"unknown chart style {self.style!r}")


def _fmt(v: float) -> str:
    return format(float(v), ".6g")


def _coord(v: float) -> str:
    return format(round(float(v), 2), ".2f")


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    span = hi - lo
    raw = span / max(target - 1, 1)
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    k = 0
    while first + k * step <= hi + 1e-9 * span:
        ticks.append(round(first + k * step, 12))
        k += 1
    return ticks


def _range(values: np.ndarray) -> tuple[float, float]:
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        return -1.0, 1.0
    lo, hi = float(finite.min()), float(finite.max())
    if hi - lo <= 1e-12 * max(1.0, abs(lo)):
        return lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def render_svg(spec: ChartSpec) -> str:
    """Render ``spec`` as a standalone SVG 1.1 document."""
    x = np.asarray(spec.x, dtype=float)
    ys = {name: np.asarray(v, dtype=float) for name, v in spec.series.items()}
    if spec.style == "bar":
        x0, x1 = float(x.min()) - 0.5, float(x.max()) + 0.5
        if x1 - x0 <= 1e-12:
            x0, x1 = x0 - 1.0, x1 + 1.0
        first = next(iter(ys.values()))
        y0, y1 = _range(np.concatenate([first, [0.0]]))
    else:
        x0, x1 = _range(x)
        y0, y1 = _range(np.concatenate(list(ys.values())))
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(v):
        return LEFT + (v - x0) / (x1 - x0) * pw

    def sy(v):
        return TOP + (y1 - v) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{LEFT + pw / 2:.2f}" y="22" text-anchor="middle" font-size="14">{escape(spec.title)}</text>',
        f'<line x1="{LEFT}" y1="{TOP + ph}" x2="{LEFT + pw}" y2="{TOP + ph}" stroke="black"/>',
        f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{TOP + ph}" stroke="black"/>',
    ]

    if spec.style == "bar" and spec.category_labels:
        xticks = [(float(v), str(lbl)) for v, lbl in zip(x, spec.category_labels)]
    else:
        xticks = [(v, _fmt(v)) for v in nice_ticks(x0, x1)]
    for v, lbl in xticks:
        px = sx(v)
        out.append(f'<line x1="{_coord(px)}" y1="{TOP + ph}" x2="{_coord(px)}" y2="{TOP + ph + 4}" stroke="black"/>')
        out.append(f'<text x="{_coord(px)}" y="{TOP + ph + 16}" text-anchor="middle">{escape(lbl)}</text>')
    for v in nice_ticks(y0, y1):
        py = sy(v)
        out.append(f'<line x1="{LEFT - 4}" y1="{_coord(py)}" x2="{LEFT}" y2="{_coord(py)}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 7}" y="{_coord(py + 4)}" text-anchor="end">{_fmt(v)}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.2f}" y="{HEIGHT - 12}" text-anchor="middle">{escape(spec.x_label)}</text>')
    out.append(
        f'<text x="16" y="{TOP + ph / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {TOP + ph / 2:.2f})">{escape(spec.y_label)}</text>'
    )

    if spec.style == "bar":
        name, vals = next(iter(ys.items()))
        bw = 0.7 * pw / (x1 - x0)
        base = sy(max(min(0.0, y1), y0))
        for xv, yv in zip(x, vals):
            top = sy(yv)
            y_top, h = min(top, base), abs(base - top)
            out.append(
                f'<rect x="{_coord(sx(xv) - bw / 2)}" y="{_coord(y_top)}" width="{_coord(bw)}" '
                f'height="{_coord(h)}" fill="{PALETTE[0]}"/>'
            )
        legend = [(name, PALETTE[0])]
    else:
        legend = []
        for k, (name, vals) in enumerate(ys.items()):
            colour = PALETTE[k % len(PALETTE)]
            pts = " ".join(f"{_coord(sx(a))},{_coord(sy(b))}" for a, b in zip(x, vals) if np.isfinite(b))
            out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.2" points="{pts}"/>')
            legend.append((name, colour))

    lx = LEFT + pw + 12
    for k, (name, colour) in enumerate(legend):
        ly = TOP + 10 + 15 * k
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 18}" y2="{ly}" stroke="{colour}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 23}" y="{ly + 4}">{escape(str(name))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
