import numpy as np
import pytest

from bcsync.ingest_io import Panel, monthly_dates

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_panel(levels, start="1988-01", ids=None) -> Panel:
    levels = np.asarray(levels, dtype=float)
    if levels.ndim == 1:
        levels = levels[:, None]
    ids = ids or tuple(f"s{j + 1}" for j in range(levels.shape[1]))
    return Panel(tuple(ids), monthly_dates(start, levels.shape[0]), levels)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def small_panel():
    return make_panel([[100.0, 50.0], [101.0, 51.5], [99.5, 50.2], [100.2, 52.0], [102.0, 51.0]])
