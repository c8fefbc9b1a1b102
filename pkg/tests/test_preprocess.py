import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bcsync.preprocess import DF_CRITICAL_VALUES, log_returns, unit_root_test
from bcsync.synthgen import levels_from_returns

from conftest import make_panel


def test_constant_series_zero_returns():
    rp = log_returns(make_panel([100, 100, 100, 100]))
    np.testing.assert_array_equal(rp.returns[:, 0], [0, 0, 0])


def test_doubling_series():
    rp = log_returns(make_panel([1, 2, 4, 8]))
    np.testing.assert_allclose(rp.returns[:, 0], [math.log(2)] * 3, rtol=0, atol=1e-15)


def test_known_increments():
    rp = log_returns(make_panel([100, 100 * math.exp(0.01), 100 * math.exp(0.03), 100 * math.exp(0.03)]))
    np.testing.assert_allclose(rp.returns[:2, 0], [0.01, 0.02], atol=1e-12)


def test_return_dates_are_later_month(small_panel):
    rp = log_returns(small_panel)
    assert rp.dates == small_panel.dates[1:]
    assert rp.returns.shape == (small_panel.n_months - 1, 2)


@settings(max_examples=50, deadline=None)
@given(arrays(float, st.integers(3, 60), elements=st.floats(-0.5, 0.5)))
def test_levels_from_returns_inverse(r):
    levels = levels_from_returns(r, 100.0)
    back = log_returns(make_panel(levels)).returns[:, 0]
    np.testing.assert_allclose(back, r, rtol=0, atol=1e-12)


def _statsmodels_df(x):
    adfuller = pytest.importorskip("statsmodels.tsa.stattools").adfuller
    return adfuller(x, maxlag=0, regression="c", autolag=None)[0]


def test_statistic_matches_statsmodels(rng):
    for _ in range(5):
        x = np.cumsum(rng.normal(size=240)) * 0.3 + rng.normal(size=240)
        assert unit_root_test(x).statistic == pytest.approx(_statsmodels_df(x), rel=1e-9)


def test_decision_rule(rng):
    x = rng.normal(size=240)
    for level in (0.01, 0.05, 0.10):
        res = unit_root_test(x, level)
        assert res.critical_value == DF_CRITICAL_VALUES[level]
        assert res.reject_unit_root == (res.statistic < res.critical_value)


def test_critical_values():
    assert DF_CRITICAL_VALUES == {0.01: -3.43, 0.05: -2.86, 0.10: -2.57}


def test_shift_invariance(rng):
    x = np.cumsum(rng.normal(size=100))
    assert unit_root_test(x + 1234.5).statistic == pytest.approx(unit_root_test(x).statistic, abs=1e-9)


def test_white_noise_rejects_random_walk_mostly_not():
    g = np.random.default_rng(1)
    noise_rej = sum(unit_root_test(g.normal(size=240)).reject_unit_root for _ in range(200))
    walk_rej = sum(unit_root_test(np.cumsum(g.normal(size=240))).reject_unit_root for _ in range(200))
    assert noise_rej == 200
    assert walk_rej < 30


@pytest.mark.parametrize(
    "series, fragment",
    [
        (np.arange(24.0), "at least 25"),
        (np.full(50, 3.0), "zero-variance"),
        (np.arange(1.0, 51.0), "deterministic"),
    ],
)
def test_degenerate_inputs(series, fragment):
    with pytest.raises(ValueError, match=fragment):
        unit_root_test(series)


def test_bad_significance():
    with pytest.raises(ValueError):
        unit_root_test(np.random.default_rng(0).normal(size=50), 0.2)
