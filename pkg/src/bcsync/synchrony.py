"""Frequency entrainment and the phase-lock indicator.

Each sector's unwrapped phase is fitted by a straight line
``theta_i(t) = omega_i t + c_i``. The lock indicator at time ``t`` is the
cross-sector RMS dispersion of the residual phase velocities
``d/dt (theta_i - omega_i t)`` about their mean ``mu(t)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class FrequencyFit:
    omega: float
    intercept: float
    rms_residual: float


@dataclass(frozen=True)
class EntrainmentSummary:
    mean_omega: float
    std_omega: float
    relative_spread: float


@dataclass(frozen=True)
class LockTrace:
    times: np.ndarray = field(repr=False)
    mu: np.ndarray = field(repr=False)
    sigma: np.ndarray = field(repr=False)
    lock_ratio: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class LockSummary:
    fraction_below: float
    is_partially_locked: bool
    threshold: float
    required_fraction: float


def sample_times(n: int, dt: float) -> np.ndarray:
    return np.arange(n) * float(dt)


def fit_frequency(phase_unwrapped, dt: float = 1.0) -> FrequencyFit:
    """Least-squares line through ``(k*dt, theta_k)``."""
    theta = np.asarray(phase_unwrapped, dtype=float)
    if theta.ndim != 1 or theta.size < 3:
        raise ValueError("frequency fit needs at least 3 samples")
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    t = sample_times(theta.size, dt)
    tc = t - t.mean()
    stt = tc @ tc
    if stt == 0:
        raise ValueError("degenerate time grid")
    omega = (tc @ (theta - theta.mean())) / stt
    intercept = theta.mean() - omega * t.mean()
    resid = theta - (omega * t + intercept)
    return FrequencyFit(float(omega), float(intercept), float(np.sqrt(np.mean(resid**2))))


def entrainment_spread(fits: Sequence[FrequencyFit]) -> EntrainmentSummary:
    """Mean, population std and ``(max - min) / mean`` of the fitted omegas."""
    if len(fits) < 2:
        raise ValueError("entrainment spread needs at least 2 sectors")
    omegas = np.array([f.omega for f in fits])
    mean = omegas.mean()
    if mean == 0:
        raise ValueError("mean omega is zero; relative spread undefined")
    return EntrainmentSummary(
        float(mean), float(omegas.std()), float((omegas.max() - omegas.min()) / abs(mean))
    )


def residual_velocity(phase_unwrapped, omega: float, dt: float = 1.0) -> np.ndarray:
    """Time derivative of ``theta(t) - omega t``.

    Central differences inside, one-sided differences at the two ends.
    """
    theta = np.asarray(phase_unwrapped, dtype=float)
    if theta.ndim != 1 or theta.size < 3:
        raise ValueError("residual velocity needs at least 3 samples")
    detrended = theta - omega * sample_times(theta.size, dt)
    return np.gradient(detrended, dt, edge_order=1)


def lock_indicator(phases: Sequence, omegas: Sequence[float], dt: float = 1.0) -> LockTrace:
    """Cross-sector mean ``mu(t)`` and RMS dispersion ``sigma(t)`` of residual velocities.

    ``lock_ratio`` is ``sigma / |mean(omegas)|``. A single sector gives a
    trivially zero ``sigma`` and triggers a ``RuntimeWarning``.
    """
    phases = [np.asarray(p, dtype=float) for p in phases]
    omegas = np.asarray(omegas, dtype=float)
    if len(phases) == 0:
        raise ValueError("no sectors")
    if len(phases) != omegas.size:
        raise ValueError(f"{len(phases)} phase series but {omegas.size} omegas")
    lengths = {p.size for p in phases}
    if len(lengths) != 1:
        raise ValueError("phase series must have equal lengths")
    if len(phases) == 1:
        warnings.warn("lock indicator over a single sector is identically zero", RuntimeWarning, stacklevel=2)
    vel = np.array([residual_velocity(p, w, dt) for p, w in zip(phases, omegas)])
    mu = vel.mean(axis=0)
    sigma = np.sqrt(np.mean((vel - mu) ** 2, axis=0))
    mean_omega = abs(omegas.mean())
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = sigma / mean_omega if mean_omega > 0 else np.where(sigma == 0, 0.0, np.inf)
    return LockTrace(sample_times(lengths.pop(), dt), mu, sigma, np.asarray(ratio, dtype=float))


def partial_lock_summary(trace: LockTrace, threshold: float = 0.1, required_fraction: float = 0.9) -> LockSummary:
    """Share of samples with ``lock_ratio < threshold``; locked if that share reaches ``required_fraction``."""
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    if not 0 < required_fraction <= 1:
        raise ValueError("required_fraction must lie in (0, 1]")
    frac = float(np.mean(trace.lock_ratio < threshold))
    return LockSummary(frac, frac >= required_fraction, float(threshold), float(required_fraction))
