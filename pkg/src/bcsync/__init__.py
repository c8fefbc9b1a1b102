"""Synchronization analysis of business-cycle panels.

Log-returns are band-pass filtered by Fourier truncation, paired with their
Hilbert transform, and the resulting phases are used to measure frequency
entrainment, phase locking and common versus individual shocks.
"""

from .analytic_signal import (
    AnalyticSeries,
    BandSpec,
    FourierDecomposition,
    analytic,
    bandpass,
    fourier_forward,
    hilbert,
    reconstruct,
    unwrap,
)
from .ingest_io import Panel, PanelFormatError, parse_panel_csv, read_table_csv, write_panel_csv, write_table_csv
from .pipeline import AnalysisConfig, AnalysisReport, analyze
from .preprocess import ReturnPanel, UnitRootResult, log_returns, unit_root_test
from .shocks import ShockDecomposition, common_shock, individual_shocks, mean_amplitude, shock_dispersion
from .synchrony import (
    FrequencyFit,
    LockTrace,
    entrainment_spread,
    fit_frequency,
    lock_indicator,
    partial_lock_summary,
    residual_velocity,
)
from .synthgen import (
    KuramotoConfig,
    kuramoto_config,
    kuramoto_panel,
    levels_from_returns,
    order_parameter,
    slutsky_series,
    solow_residual,
)

__version__ = "0.1.0"
