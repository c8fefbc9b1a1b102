"""Synthetic ground truth: Slutsky moving sums and noisy Kuramoto panels.

All randomness comes from ``numpy.random.Generator(PCG64(seed))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .ingest_io import Panel, monthly_dates

RNG_NAME = "numpy.random.Generator(PCG64)"
MAX_PHASE_STEP = 0.5  # rad per integration step


def rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def slutsky_series(n: int, window: int = 10, seed=0) -> np.ndarray:
    """Moving sum of ``window`` iid uniform(0, 1) draws, ``n`` samples long."""
    n, window = int(n), int(window)
    if window < 1 or n < window:
        raise ValueError(f"need n >= window >= 1, got n={n}, window={window}")
    draws = rng(seed).uniform(0.0, 1.0, size=n + window - 1)
    return np.lib.stride_tricks.sliding_window_view(draws, window).sum(axis=1)


def solow_residual(dY, dK, dL, alpha: float):
    """Growth-accounting residual ``dY - alpha dK - (1 - alpha) dL``."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    arrays = [np.asarray(v, dtype=float) for v in (dY, dK, dL)]
    if len({a.shape for a in arrays}) != 1:
        raise ValueError("dY, dK and dL must have the same length")
    dY, dK, dL = arrays
    out = dY - alpha * dK - (1.0 - alpha) * dL
    return float(out) if out.ndim == 0 else out


def levels_from_returns(returns, initial_level: float = 100.0) -> np.ndarray:
    r = np.asarray(returns, dtype=float)
    if not initial_level > 0:
        raise ValueError("initial_level must be positive")
    if not np.all(np.isfinite(r)):
        raise ValueError("returns must be finite")
    return initial_level * np.exp(np.concatenate(([0.0], np.cumsum(r))))


def order_parameter(phases) -> float:
    """Modulus of the mean unit phasor."""
    p = np.asarray(phases, dtype=float)
    if p.size == 0:
        raise ValueError("no phases")
    return float(np.abs(np.exp(1j * p).mean()))


@dataclass(frozen=True)
class KuramotoConfig:
    """Mean-field Kuramoto model with idiosyncratic noise and common phase kicks.

    Frequencies and coupling are in rad/month, ``dt`` in months. Kicks are
    ``(time, delta)`` pairs; ``delta`` is added to every phase at the
    integration step nearest ``time``. ``initial_phases`` defaults to
    uniform draws on [0, 2 pi) from the seeded generator. The first
    ``burn_in_steps`` steps are integrated and discarded, so ``time = 0``
    is the state after the burn-in.
    """

    natural_frequencies: Sequence[float]
    coupling: float = 0.0
    noise_std: float | Sequence[float] = 0.0
    common_kicks: Sequence[tuple[float, float]] = ()
    dt: float = 0.1
    n_steps: int = 2390
    seed: int = 0
    initial_phases: Sequence[float] | None = None
    start_date: str = "1988-01"
    burn_in_steps: int = 0

    def __post_init__(self):
        w = np.asarray(self.natural_frequencies, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("need at least one oscillator")
        if not np.all(np.isfinite(w)):
            raise ValueError("natural frequencies must be finite")
        if self.coupling < 0:
            raise ValueError("coupling must be non-negative")
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if np.max(np.abs(w)) * self.dt >= MAX_PHASE_STEP:
            raise ValueError(
                f"step too large: max|omega| * dt = {np.max(np.abs(w)) * self.dt:.3g} >= {MAX_PHASE_STEP}"
            )
        if int(self.n_steps) < 1:
            raise ValueError("n_steps must be >= 1")
        if int(self.burn_in_steps) < 0:
            raise ValueError("burn_in_steps must be >= 0")
        noise = np.broadcast_to(np.asarray(self.noise_std, dtype=float), w.shape)
        if np.any(noise < 0):
            raise ValueError("noise_std must be non-negative")
        if self.initial_phases is not None and np.asarray(self.initial_phases).shape != w.shape:
            raise ValueError("initial_phases must have one entry per oscillator")
        for t, _ in self.common_kicks:
            if not 0 <= t <= self.n_steps * self.dt:
                raise ValueError(f"kick time {t} outside the simulated span")

    @property
    def n_oscillators(self) -> int:
        return len(self.natural_frequencies)

    @property
    def steps_per_month(self) -> int:
        k = round(1.0 / self.dt)
        if k < 1 or abs(k * self.dt - 1.0) > 1e-9:
            raise ValueError(f"dt={self.dt} does not divide one month")
        return k


@dataclass(frozen=True)
class KuramotoRun:
    times: np.ndarray = field(repr=False)  # integration grid, months
    phases: np.ndarray = field(repr=False)  # (S, n_steps + 1), unwrapped
    monthly_phases: np.ndarray = field(repr=False)  # (S, months)
    panel: Panel


def integrate_kuramoto(cfg: KuramotoConfig) -> tuple[np.ndarray, np.ndarray]:
    """Euler-Maruyama integration; returns ``(times, phases)`` with phases shaped ``(S, n_steps+1)``."""
    gen = rng(cfg.seed)
    w = np.asarray(cfg.natural_frequencies, dtype=float)
    S = w.size
    noise = np.broadcast_to(np.asarray(cfg.noise_std, dtype=float), w.shape)
    if cfg.initial_phases is None:
        theta = gen.uniform(0.0, 2.0 * np.pi, size=S)
    else:
        theta = np.array(cfg.initial_phases, dtype=float)
    n_steps = int(cfg.n_steps)
    kicks = np.zeros(n_steps + 1)
    for t, delta in cfg.common_kicks:
        kicks[int(round(t / cfg.dt))] += delta
    K = float(cfg.coupling)
    sqdt = np.sqrt(cfg.dt)
    noisy = bool(np.any(noise > 0))

    def step(theta):
        drift = w.copy()
        if K > 0 and S > 1:
            # (K/S) sum_j sin(theta_j - theta_i) via the mean-field phasor
            z = np.exp(1j * theta).mean()
            drift += K * np.abs(z) * np.sin(np.angle(z) - theta)
        theta = theta + drift * cfg.dt
        if noisy:
            theta = theta + noise * sqdt * gen.standard_normal(S)
        return theta

    for _ in range(int(cfg.burn_in_steps)):
        theta = step(theta)
    out = np.empty((S, n_steps + 1))
    theta = theta + kicks[0]
    out[:, 0] = theta
    for k in range(1, n_steps + 1):
        theta = step(theta) + kicks[k]
        out[:, k] = theta
    return np.arange(n_steps + 1) * cfg.dt, out


def kuramoto_panel(cfg: KuramotoConfig, sector_prefix: str = "s") -> KuramotoRun:
    """Simulate the oscillators and turn them into a synthetic index panel.

    Phases are sampled at whole months ``m = 0 .. M-1``; the log-return of
    month ``m >= 1`` is ``cos(theta(m))`` and levels start at 100, giving an
    ``M``-month Panel.
    """
    times, phases = integrate_kuramoto(cfg)
    spm = cfg.steps_per_month
    monthly = phases[:, ::spm]
    if monthly.shape[1] < 4:
        raise ValueError("simulation spans fewer than 4 months")
    returns = np.cos(monthly[:, 1:])
    levels = np.column_stack([levels_from_returns(r, 100.0) for r in returns])
    ids = tuple(f"{sector_prefix}{i + 1}" for i in range(cfg.n_oscillators))
    panel = Panel(ids, monthly_dates(cfg.start_date, monthly.shape[1]), levels)
    return KuramotoRun(times, phases, monthly, panel)


def natural_frequencies(n: int, mean_omega: float, spread: float, seed) -> np.ndarray:
    """Normal draws with standard deviation ``spread * mean_omega``.

    Uses a generator stream separate from the integrator's (seed offset by a
    fixed tag) so the frequencies do not shift the phase-noise sequence.
    """
    if n < 1:
        raise ValueError("need at least one oscillator")
    g = np.random.Generator(np.random.PCG64([int(seed), 0x5EED]))
    return mean_omega + spread * mean_omega * g.standard_normal(n)


def kuramoto_config(
    sectors: int,
    months: int,
    *,
    center_period: float = 48.0,
    freq_spread: float = 0.3,
    coupling: float | None = None,
    coupling_factor: float | None = None,
    noise: float = 0.0,
    kicks: Sequence[tuple[float, float]] = (),
    steps_per_month: int = 10,
    burn_in_months: int = 0,
    seed: int = 0,
    start_date: str = "1988-01",
) -> KuramotoConfig:
    """Convenience builder using months and relative spreads.

    Natural frequencies are normal around ``2 pi / center_period`` with
    standard deviation ``freq_spread`` times that mean. The coupling is given
    either directly or as ``coupling_factor`` times the frequency std.
    """
    if sectors < 1:
        raise ValueError("sectors must be >= 1")
    if months < 4:
        raise ValueError("months must be >= 4")
    if freq_spread < 0:
        raise ValueError("freq_spread must be non-negative")
    mean_omega = 2.0 * np.pi / center_period
    w = natural_frequencies(sectors, mean_omega, freq_spread, seed)
    if coupling is None:
        coupling = (coupling_factor or 0.0) * freq_spread * mean_omega
    dt = 1.0 / steps_per_month
    return KuramotoConfig(
        natural_frequencies=tuple(w),
        coupling=float(coupling),
        noise_std=float(noise),
        common_kicks=tuple(kicks),
        dt=dt,
        n_steps=(months - 1) * steps_per_month,
        seed=seed,
        start_date=start_date,
        burn_in_steps=burn_in_months * steps_per_month,
    )
