"""Stationarization: log-returns and a Dickey-Fuller unit-root check."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ingest_io import Panel

# Large-sample Dickey-Fuller critical values, regression with intercept, no trend.
DF_CRITICAL_VALUES = {0.01: -3.43, 0.05: -2.86, 0.10: -2.57}
MIN_UNIT_ROOT_LENGTH = 25


@dataclass(frozen=True)
class ReturnPanel:
    sector_ids: tuple[str, ...]
    dates: tuple[str, ...]
    returns: np.ndarray = field(repr=False)

    @property
    def n_samples(self) -> int:
        return self.returns.shape[0]


@dataclass(frozen=True)
class UnitRootResult:
    statistic: float
    critical_value: float
    significance: float
    reject_unit_root: bool


def log_returns(panel: Panel) -> ReturnPanel:
    """Month-on-month log-returns; dates are the later month of each pair."""
    logs = np.log(panel.levels)
    returns = logs[1:] - logs[:-1]
    returns.setflags(write=False)
    return ReturnPanel(panel.sector_ids, panel.dates[1:], returns)


def unit_root_test(series, significance: float = 0.05) -> UnitRootResult:
    """Dickey-Fuller t-test of ``dx_t = c + rho * x_{t-1} + e_t``.

    The unit root is rejected (series judged stationary) when the t-ratio
    of ``rho`` falls below the critical value for ``significance``.

    Raises
    ------
    ValueError
        If the series is shorter than 25 samples, has zero variance, or the
        regression leaves no residual variance to estimate a standard error.
    """
    if significance not in DF_CRITICAL_VALUES:
        raise ValueError(f"significance must be one of {sorted(DF_CRITICAL_VALUES)}")
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or x.size < MIN_UNIT_ROOT_LENGTH:
        raise ValueError(f"unit-root test needs at least {MIN_UNIT_ROOT_LENGTH} samples")
    if not np.all(np.isfinite(x)):
        raise ValueError("series contains non-finite values")

    lag = x[:-1]
    dx = np.diff(x)
    n = dx.size
    lag_c = lag - lag.mean()
    sxx = lag_c @ lag_c
    if sxx <= 1e-24 * max(1.0, lag @ lag):
        raise ValueError("zero-variance series: regression is singular")
    dx_c = dx - dx.mean()
    rho = (lag_c @ dx_c) / sxx
    resid = dx_c - rho * lag_c
    ssr = resid @ resid
    if ssr <= 1e-20 * max(dx @ dx, 1e-300):
        raise ValueError("regression residuals vanish (deterministic series); statistic undefined")
    s2 = ssr / (n - 2)
    stat = float(rho / np.sqrt(s2 / sxx))
    crit = DF_CRITICAL_VALUES[significance]
    return UnitRootResult(stat, crit, significance, stat < crit)
