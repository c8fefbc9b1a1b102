import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcsync.ingest_io import (
    Panel,
    PanelFormatError,
    monthly_dates,
    panel_to_text,
    parse_panel_csv,
    read_table_csv,
    write_table_csv,
)

MINIMAL = "date,s1\n1988-01,100.0\n1988-02,101.0\n1988-03,99.5\n1988-04,100.2\n"


def test_minimal_panel():
    p = parse_panel_csv(MINIMAL)
    assert p.n_sectors == 1 and p.n_months == 4
    assert p.dates == ("1988-01", "1988-02", "1988-03", "1988-04")
    np.testing.assert_array_equal(p.levels[:, 0], [100.0, 101.0, 99.5, 100.2])


def test_skipped_month_reports_row():
    text = "date,s1\n1988-01,1\n1988-03,1\n1988-04,1\n1988-05,1\n"
    with pytest.raises(PanelFormatError, match="gap") as err:
        parse_panel_csv(text)
    assert err.value.row == 3


def test_zero_level_rejected():
    with pytest.raises(PanelFormatError, match="non-positive") as err:
        parse_panel_csv(MINIMAL.replace("99.5", "0.0"))
    assert (err.value.row, err.value.column) == (4, 2)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("month,s1\n1988-01,1\n1988-02,1\n1988-03,1\n1988-04,1\n", "header"),
        ("date,s1,s1\n1988-01,1,1\n1988-02,1,1\n1988-03,1,1\n1988-04,1,1\n", "duplicate"),
        ("date,s1\n1988-01,1\n1988-02,1,2\n1988-03,1\n1988-04,1\n", "expected 2 fields"),
        ("date,s1\n1988-01,1\n1988-02,abc\n1988-03,1\n1988-04,1\n", "non-numeric"),
        ("date,s1\n1988-01,1\n1988-02,-3\n1988-03,1\n1988-04,1\n", "non-positive"),
        ("date,s1\n1988-01,1\n1988-01,1\n1988-02,1\n1988-03,1\n", "non-increasing"),
        ("date,s1\n1988-1,1\n1988-02,1\n1988-03,1\n1988-04,1\n", "YYYY-MM"),
        ("date,s1\n1988-13,1\n1989-01,1\n1989-02,1\n1989-03,1\n", "bad month"),
        ("date,s1\n1988-01,1\n1988-02,1\n1988-03,1\n", "at least 4"),
        ("date,s1\n1988-01,1\n1988-02,nan\n1988-03,1\n1988-04,1\n", "non-finite"),
        ("date,s1\r\n1988-01,1\r\n1988-02,1\r\n1988-03,1\r\n1988-04,1\r\n", "CR"),
    ],
)
def test_malformed_inputs(text, fragment):
    with pytest.raises(PanelFormatError, match=fragment):
        parse_panel_csv(text)


def test_scientific_notation_and_year_rollover():
    text = "date,a,b\n1999-11,1e2,2.5E1\n1999-12,1.01e2,25\n2000-01,99,26\n2000-02,100,27\n"
    p = parse_panel_csv(text)
    assert p.levels[0, 0] == 100.0 and p.levels[0, 1] == 25.0
    assert p.dates[2] == "2000-01"


def test_write_table_shape():
    buf = io.StringIO()
    write_table_csv(["t", "x"], [[0, 1], [1.5, 2.5]], buf)
    text = buf.getvalue()
    assert text.count("\n") == 3 and text.endswith("\n") and "\r" not in text
    assert text.splitlines()[0] == "t,x"


def test_write_table_empty_columns():
    buf = io.StringIO()
    write_table_csv(["a", "b"], [[], []], buf)
    assert buf.getvalue() == "a,b\n"


def test_write_table_rejects_mismatch():
    with pytest.raises(ValueError, match="unequal"):
        write_table_csv(["a", "b"], [[1, 2], [1]], io.StringIO())
    with pytest.raises(ValueError, match="unique"):
        write_table_csv(["a", "a"], [[1], [1]], io.StringIO())


def test_write_table_significant_digits():
    buf = io.StringIO()
    write_table_csv(["x"], [[1.0 / 3.0]], buf)
    digits = buf.getvalue().splitlines()[1].replace("0.", "", 1)
    assert len(digits) >= 12


def test_table_round_trip(rng):
    cols = [rng.normal(size=50) * 10.0 ** rng.integers(-8, 8, size=50) for _ in range(3)]
    buf = io.StringIO()
    write_table_csv(["a", "b", "c"], cols, buf)
    back = read_table_csv(buf.getvalue())
    for name, col in zip("abc", cols):
        np.testing.assert_allclose(back[name], col, rtol=1e-9, atol=0)


def test_table_string_column_round_trip():
    buf = io.StringIO()
    write_table_csv(["sector", "omega"], [["s1", "s2"], [0.1, 0.2]], buf)
    back = read_table_csv(buf.getvalue())
    assert list(back["sector"]) == ["s1", "s2"]
    np.testing.assert_array_equal(back["omega"], [0.1, 0.2])


levels_strategy = st.floats(min_value=1e-6, max_value=1e9, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(4, 30),
    s=st.integers(1, 5),
    start_year=st.integers(1900, 2100),
    start_month=st.integers(1, 12),
    data=st.data(),
)
def test_panel_round_trip(n, s, start_year, start_month, data):
    vals = data.draw(st.lists(levels_strategy, min_size=n * s, max_size=n * s))
    levels = np.array(vals).reshape(n, s)
    p = Panel(tuple(f"x{j}" for j in range(s)), monthly_dates(f"{start_year:04d}-{start_month:02d}", n), levels)
    q = parse_panel_csv(panel_to_text(p))
    assert q.sector_ids == p.sector_ids and q.dates == p.dates
    np.testing.assert_allclose(q.levels, p.levels, rtol=1e-9)


CORRUPTIONS = ["0", "-1.5", "abc", "", "inf", "1,2"]


@settings(max_examples=80, deadline=None)
@given(row=st.integers(1, 6), col=st.integers(0, 2), bad=st.sampled_from(CORRUPTIONS + ["1988-02", "1987-12"]))
def test_single_cell_corruption_rejected(row, col, bad):
    levels = np.linspace(90, 110, 18).reshape(6, 3)
    p = Panel(("a", "b", "c"), monthly_dates("1988-01", 6), levels)
    lines = panel_to_text(p).splitlines()
    cells = lines[row].split(",")
    if col == 0:
        if bad not in ("1988-02", "1987-12", "abc", ""):
            bad = "1988-13"
        if bad == cells[0]:
            bad = "1987-12"
    else:
        if bad in ("1988-02", "1987-12"):
            bad = "0"
    cells[col] = bad
    lines[row] = ",".join(cells)
    with pytest.raises(PanelFormatError):
        parse_panel_csv("\n".join(lines) + "\n")


def test_panel_constructor_validates():
    with pytest.raises(PanelFormatError):
        Panel(("a",), monthly_dates("2000-01", 4), [1, 2, 3])
    with pytest.raises(PanelFormatError):
        Panel(("a", "a"), monthly_dates("2000-01", 4), np.ones((4, 2)))
    with pytest.raises(PanelFormatError):
        Panel(("a",), ("2000-01", "2000-02", "2000-04", "2000-05"), np.ones(4))
