"""Fourier-series expansion, period-band truncation and the discrete Hilbert pair.

A length-``N`` record is expanded as::

    x(t) = a0 + sum_n [A_n cos(2 pi n t / N) + B_n sin(2 pi n t / N)],  t = 0..N-1

so harmonic ``n`` has a period of ``N / n`` samples. The Hilbert transform
rotates each harmonic by a quarter turn (cos -> sin, sin -> -cos); the mean
and the Nyquist term (whose sine vanishes on the grid) map to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MIN_SAMPLES = 4


@dataclass(frozen=True)
class BandSpec:
    """Pass band in periods (months), inclusive at both ends."""

    min_period: float
    max_period: float

    def __post_init__(self):
        lo, hi = float(self.min_period), float(self.max_period)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise ValueError("band periods must be finite")
        if lo < 2:
            raise ValueError(f"min_period must be >= 2, got {lo}")
        if not lo < hi:
            raise ValueError(f"min_period ({lo}) must be < max_period ({hi})")
        object.__setattr__(self, "min_period", lo)
        object.__setattr__(self, "max_period", hi)

    @classmethod
    def parse(cls, text: str) -> "BandSpec":
        """Parse ``"MIN:MAX"``."""
        parts = text.split(":")
        if len(parts) != 2:
            raise ValueError(f"band must look like MIN:MAX, got {text!r}")
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError:
            raise ValueError(f"band must look like MIN:MAX, got {text!r}") from None
        return cls(lo, hi)

    def check_length(self, n_samples: int) -> None:
        if self.max_period > n_samples:
            raise ValueError(f"max_period {self.max_period} exceeds record length {n_samples}")

    def harmonics(self, n_samples: int) -> np.ndarray:
        """Harmonic indices whose period ``N/n`` lies inside the band."""
        n = np.arange(1, n_samples // 2 + 1)
        period = n_samples / n
        return n[(period >= self.min_period) & (period <= self.max_period)]

    def __str__(self):
        return f"{self.min_period:g}:{self.max_period:g}"


@dataclass(frozen=True)
class FourierDecomposition:
    """Real Fourier coefficients of a length-``n_samples`` record.

    ``cos_coeffs[n - 1]`` and ``sin_coeffs[n - 1]`` hold ``A_n`` and ``B_n``
    for ``n = 1 .. n_samples // 2``. For even records the last entry is the
    Nyquist term, which has no sine part.
    """

    n_samples: int
    mean_term: float
    cos_coeffs: np.ndarray = field(repr=False)
    sin_coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        k = self.n_samples // 2
        a = np.array(self.cos_coeffs, dtype=float)
        b = np.array(self.sin_coeffs, dtype=float)
        if a.shape != (k,) or b.shape != (k,):
            raise ValueError(f"expected {k} coefficient pairs for N={self.n_samples}")
        if self.n_samples % 2 == 0 and k > 0:
            b[-1] = 0.0
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "cos_coeffs", a)
        object.__setattr__(self, "sin_coeffs", b)
        object.__setattr__(self, "mean_term", float(self.mean_term))

    @property
    def harmonics(self) -> dict[int, tuple[float, float]]:
        return {n + 1: (float(a), float(b)) for n, (a, b) in enumerate(zip(self.cos_coeffs, self.sin_coeffs))}

    @property
    def has_nyquist(self) -> bool:
        return self.n_samples % 2 == 0


@lru_cache(maxsize=16)
def _basis(n_samples: int) -> tuple[np.ndarray, np.ndarray]:
    # (n * t) mod N keeps the trig arguments small and exact.
    t = np.arange(n_samples)
    n = np.arange(1, n_samples // 2 + 1)
    arg = 2.0 * np.pi * ((n[:, None] * t[None, :]) % n_samples) / n_samples
    cos_b, sin_b = np.cos(arg), np.sin(arg)
    cos_b.setflags(write=False)
    sin_b.setflags(write=False)
    return cos_b, sin_b


def fourier_forward(series) -> FourierDecomposition:
    """Expand a real series in the harmonics of its record length."""
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or x.size < MIN_SAMPLES:
        raise ValueError(f"Fourier expansion needs at least {MIN_SAMPLES} samples")
    N = x.size
    cos_b, sin_b = _basis(N)
    a = (2.0 / N) * (cos_b @ x)
    b = (2.0 / N) * (sin_b @ x)
    if N % 2 == 0:
        a[-1] *= 0.5
    return FourierDecomposition(N, float(x.mean()), a, b)


def reconstruct(dec: FourierDecomposition) -> np.ndarray:
    cos_b, sin_b = _basis(dec.n_samples)
    return dec.mean_term + dec.cos_coeffs @ cos_b + dec.sin_coeffs @ sin_b


def bandpass(dec: FourierDecomposition, band: BandSpec) -> FourierDecomposition:
    """Keep only harmonics with ``min_period <= N/n <= max_period``; drop the mean."""
    band.check_length(dec.n_samples)
    keep = band.harmonics(dec.n_samples)
    if keep.size == 0:
        raise ValueError(f"no harmonic of an N={dec.n_samples} record falls in band {band}")
    mask = np.zeros(dec.n_samples // 2, dtype=bool)
    mask[keep - 1] = True
    return FourierDecomposition(
        dec.n_samples,
        0.0,
        np.where(mask, dec.cos_coeffs, 0.0),
        np.where(mask, dec.sin_coeffs, 0.0),
    )


def hilbert(dec: FourierDecomposition) -> np.ndarray:
    """Quadrature series ``sum_n [A_n sin - B_n cos]`` on the sample grid."""
    cos_b, sin_b = _basis(dec.n_samples)
    a = np.array(dec.cos_coeffs)
    if dec.has_nyquist:
        a[-1] = 0.0  # sin(pi t) == 0 at integer t
    return a @ sin_b - dec.sin_coeffs @ cos_b


@dataclass(frozen=True)
class AnalyticSeries:
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    amplitude: np.ndarray = field(repr=False)
    phase_wrapped: np.ndarray = field(repr=False)
    phase_unwrapped: np.ndarray = field(repr=False)

    def __len__(self):
        return self.x.size


def wrap(phase) -> np.ndarray:
    """Map angles into (-pi, pi]."""
    p = np.asarray(phase, dtype=float)
    w = p - 2.0 * np.pi * np.ceil((p - np.pi) / (2.0 * np.pi))
    return np.where(w <= -np.pi, w + 2.0 * np.pi, w)


def unwrap(phase_wrapped) -> np.ndarray:
    """Remove 2*pi jumps so every step lies in (-pi, pi]; the first sample is kept."""
    p = np.asarray(phase_wrapped, dtype=float)
    if p.size < 2:
        return p.copy()
    steps = wrap(np.diff(p))
    out = np.empty_like(p)
    out[0] = p[0]
    out[1:] = p[0] + np.cumsum(steps)
    return out


def analytic(x_filtered, y) -> AnalyticSeries:
    """Amplitude and phase of ``z = x + i y``.

    Samples with ``x == y == 0`` have no defined phase; they inherit the
    previous sample's phase. A zero first sample, or an all-zero series,
    raises ``ValueError``.
    """
    x = np.asarray(x_filtered, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-D sequences of equal length")
    amp = np.hypot(x, y)
    zero = amp == 0.0
    if zero.all():
        raise ValueError("all-zero signal has no phase")
    if zero[0]:
        raise ValueError("phase undefined at the first sample (x = y = 0)")
    phase = np.arctan2(y, x)
    phase = np.where(phase == -np.pi, np.pi, phase)
    if zero.any():
        for k in np.flatnonzero(zero):
            phase[k] = phase[k - 1]
    return AnalyticSeries(x, y, amp, phase, unwrap(phase))


def analytic_from_series(series, band: BandSpec) -> AnalyticSeries:
    """Expand, band-pass, Hilbert-transform and extract phase in one go."""
    dec = bandpass(fourier_forward(series), band)
    return analytic(reconstruct(dec), hilbert(dec))
