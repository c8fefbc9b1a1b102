"""Common and individual shocks from per-sector phases.

The common shock is the cross-sector mean of ``cos theta_i(t)``; a sector's
individual shock is its own ``cos theta_i(t)`` minus that mean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .analytic_signal import AnalyticSeries


@dataclass(frozen=True)
class ShockDecomposition:
    times: np.ndarray = field(repr=False)
    mean_amplitude: np.ndarray = field(repr=False)
    common_shock: np.ndarray = field(repr=False)
    individual: np.ndarray = field(repr=False)  # shape (S, T)
    dispersion: np.ndarray = field(repr=False)


def _stack(analytic: Sequence[AnalyticSeries], attr: str) -> np.ndarray:
    if len(analytic) == 0:
        raise ValueError("no sectors")
    arrays = [np.asarray(getattr(a, attr), dtype=float) for a in analytic]
    if len({a.size for a in arrays}) != 1:
        raise ValueError("sector series must have equal lengths")
    return np.array(arrays)


def mean_amplitude(analytic: Sequence[AnalyticSeries]) -> np.ndarray:
    # Modulus sqrt(x^2 + y^2) rather than x / cos(theta), which blows up on the imaginary axis.
    return _stack(analytic, "amplitude").mean(axis=0)


def common_shock(analytic: Sequence[AnalyticSeries]) -> np.ndarray:
    return np.cos(_stack(analytic, "phase_wrapped")).mean(axis=0)


def individual_shocks(analytic: Sequence[AnalyticSeries], common) -> np.ndarray:
    cos_theta = np.cos(_stack(analytic, "phase_wrapped"))
    common = np.asarray(common, dtype=float)
    if common.shape != cos_theta.shape[1:]:
        raise ValueError("common shock length does not match the sectors")
    return cos_theta - common


def shock_dispersion(individual) -> np.ndarray:
    """Population standard deviation across sectors at each time."""
    ind = np.asarray(individual, dtype=float)
    if ind.ndim != 2 or ind.shape[0] < 2:
        raise ValueError("dispersion needs at least 2 sectors")
    return ind.std(axis=0)


def decompose(analytic: Sequence[AnalyticSeries], dt: float = 1.0) -> ShockDecomposition:
    common = common_shock(analytic)
    ind = individual_shocks(analytic, common)
    disp = shock_dispersion(ind) if ind.shape[0] >= 2 else np.zeros(ind.shape[1])
    return ShockDecomposition(
        np.arange(common.size) * float(dt), mean_amplitude(analytic), common, ind, disp
    )
