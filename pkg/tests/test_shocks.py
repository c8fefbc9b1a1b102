import numpy as np
import pytest

from bcsync.analytic_signal import analytic, analytic_from_series, BandSpec
from bcsync.shocks import common_shock, decompose, individual_shocks, mean_amplitude, shock_dispersion

T = np.arange(240.0)


def series_from_phase(theta, amp=1.0):
    theta = np.asarray(theta, dtype=float)
    return analytic(amp * np.cos(theta), amp * np.sin(theta))


def test_mean_amplitude_simple():
    a = [series_from_phase(0.1 * T), series_from_phase(0.1 * T + 1)]
    np.testing.assert_allclose(mean_amplitude(a), 1.0, atol=1e-12)
    b = [series_from_phase(0.1 * T, 1.0), series_from_phase(0.2 * T, 3.0)]
    np.testing.assert_allclose(mean_amplitude(b), 2.0, atol=1e-12)


def test_mean_amplitude_matches_ratio_form(rng):
    x = rng.normal(size=(6, 240))
    sectors = [analytic_from_series(row, BandSpec(2, 240)) for row in x]
    ours = mean_amplitude(sectors)
    xs = np.array([s.x for s in sectors])
    cos = np.cos(np.array([s.phase_wrapped for s in sectors]))
    ok = np.all(np.abs(cos) > 0.5, axis=0)
    assert ok.sum() > 0
    ratio = (xs / cos).mean(axis=0)
    np.testing.assert_allclose(ours[ok], ratio[ok], rtol=1e-9)


def test_common_shock_in_phase_and_antiphase():
    np.testing.assert_allclose(common_shock([series_from_phase(0.1 * T)] * 3), np.cos(0.1 * T), atol=1e-12)
    np.testing.assert_allclose(
        common_shock([series_from_phase(0.1 * T), series_from_phase(0.1 * T + np.pi)]), 0.0, atol=1e-12
    )


def test_common_shock_uniform_phases_small():
    g = np.random.default_rng(5)
    S = 64
    sectors = [series_from_phase(g.uniform(-np.pi, np.pi, 400)) for _ in range(S)]
    c = common_shock(sectors)
    # |mean of S iid cosines| exceeds 2/sqrt(S) at roughly a 0.5% rate (std = 1/sqrt(2S))
    assert np.mean(np.abs(c) < 2 / np.sqrt(S)) > 0.97
    assert np.all(np.abs(c) <= 1.0)


def test_individual_shocks_arithmetic():
    a = [series_from_phase([np.arccos(0.8)] * 3), series_from_phase([np.arccos(0.2)] * 3)]
    ind = individual_shocks(a, common_shock(a))
    np.testing.assert_allclose(ind[:, 0], [0.3, -0.3], atol=1e-12)
    np.testing.assert_allclose(shock_dispersion(ind), 0.3, atol=1e-12)


def test_synchronized_panel_has_no_individual_shocks():
    a = [series_from_phase(0.1 * T)] * 5
    ind = individual_shocks(a, common_shock(a))
    np.testing.assert_allclose(ind, 0.0, atol=1e-15)
    np.testing.assert_allclose(shock_dispersion(ind), 0.0, atol=1e-15)


def test_decomposition_invariants(rng):
    sectors = [series_from_phase(rng.uniform(-10, 10, 100), rng.uniform(0.5, 2)) for _ in range(7)]
    d = decompose(sectors)
    np.testing.assert_allclose(d.individual.mean(axis=0), 0.0, atol=1e-12)
    cos = np.cos([s.phase_wrapped for s in sectors])
    np.testing.assert_allclose(d.common_shock + d.individual, cos, atol=1e-15)
    assert np.all(np.abs(d.common_shock) <= 1.0) and np.all(d.dispersion >= 0)


def test_scaling(rng):
    x = rng.normal(size=(4, 120))
    band = BandSpec(4, 60)
    a = [analytic_from_series(r, band) for r in x]
    b = [analytic_from_series(3.5 * r, band) for r in x]
    np.testing.assert_allclose(mean_amplitude(b), 3.5 * mean_amplitude(a), rtol=1e-9)
    np.testing.assert_allclose(common_shock(b), common_shock(a), atol=1e-9)


def test_errors():
    with pytest.raises(ValueError):
        shock_dispersion(np.zeros((1, 5)))
    with pytest.raises(ValueError):
        mean_amplitude([])
    with pytest.raises(ValueError):
        individual_shocks([series_from_phase(T)], np.zeros(3))
