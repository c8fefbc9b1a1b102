"""End-to-end analysis of a Panel: returns -> band-passed phases -> sync and shock reports."""

from __future__ import annotations

import hashlib
import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import analytic_signal as asig
from . import preprocess, shocks, synchrony
from .analytic_signal import AnalyticSeries, BandSpec
from .ingest_io import Panel, panel_to_text

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    band: BandSpec = field(default_factory=lambda: BandSpec(24.0, 80.0))
    significance: float = 0.05
    lock_threshold: float = 0.1
    lock_fraction: float = 0.9

    def __post_init__(self):
        if self.significance not in preprocess.DF_CRITICAL_VALUES:
            raise ValueError(f"significance must be one of {sorted(preprocess.DF_CRITICAL_VALUES)}")
        if not self.lock_threshold > 0:
            raise ValueError("lock_threshold must be positive")
        if not 0 < self.lock_fraction <= 1:
            raise ValueError("lock_fraction must lie in (0, 1]")


@dataclass(frozen=True)
class AnalysisReport:
    sector_ids: tuple[str, ...]
    dates: tuple[str, ...]
    config: AnalysisConfig
    input_digest: str
    stationarity: tuple[preprocess.UnitRootResult | None, ...]
    analytic: tuple[AnalyticSeries, ...]
    fits: tuple[synchrony.FrequencyFit, ...]
    entrainment: synchrony.EntrainmentSummary | None
    lock: synchrony.LockTrace
    lock_summary: synchrony.LockSummary
    shocks: shocks.ShockDecomposition
    warnings: tuple[str, ...] = ()

    @property
    def n_sectors(self) -> int:
        return len(self.sector_ids)


def panel_digest(panel: Panel) -> str:
    return hashlib.sha256(panel_to_text(panel).encode("utf-8")).hexdigest()


def analyze(panel: Panel, cfg: AnalysisConfig | None = None) -> AnalysisReport:
    """Run the full synchronization analysis on ``panel``.

    The Fourier record length is the number of log-returns (``N - 1``). A
    failed unit-root rejection or a single-sector panel is recorded in
    ``report.warnings`` rather than raised.
    """
    cfg = cfg or AnalysisConfig()
    notes: list[str] = []
    rp = preprocess.log_returns(panel)
    n = rp.n_samples
    cfg.band.check_length(n)
    if cfg.band.harmonics(n).size == 0:
        raise ValueError(f"no harmonic of an N={n} record falls in band {cfg.band}")

    stationarity = []
    for j, sid in enumerate(rp.sector_ids):
        try:
            res = preprocess.unit_root_test(rp.returns[:, j], cfg.significance)
        except ValueError as exc:
            notes.append(f"unit-root test skipped for {sid}: {exc}")
            res = None
        else:
            if not res.reject_unit_root:
                notes.append(
                    f"unit root not rejected for {sid} at {cfg.significance:g} "
                    f"(statistic {res.statistic:.3f} >= {res.critical_value})"
                )
        stationarity.append(res)

    analytic = []
    for j, sid in enumerate(rp.sector_ids):
        try:
            analytic.append(asig.analytic_from_series(rp.returns[:, j], cfg.band))
        except ValueError as exc:
            raise ValueError(f"sector {sid}: {exc}") from exc

    fits = [synchrony.fit_frequency(a.phase_unwrapped, 1.0) for a in analytic]
    entrain = synchrony.entrainment_spread(fits) if len(fits) >= 2 else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        lock = synchrony.lock_indicator([a.phase_unwrapped for a in analytic], [f.omega for f in fits], 1.0)
    if len(fits) == 1:
        notes.append("single sector: lock indicator is identically zero and entrainment is undefined")
    summary = synchrony.partial_lock_summary(lock, cfg.lock_threshold, cfg.lock_fraction)
    decomposition = shocks.decompose(analytic, 1.0)

    for msg in notes:
        log.warning(msg)
    return AnalysisReport(
        sector_ids=rp.sector_ids,
        dates=rp.dates,
        config=cfg,
        input_digest=panel_digest(panel),
        stationarity=tuple(stationarity),
        analytic=tuple(analytic),
        fits=tuple(fits),
        entrainment=entrain,
        lock=lock,
        lock_summary=summary,
        shocks=decomposition,
        warnings=tuple(notes),
    )
