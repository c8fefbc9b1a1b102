"""Panel CSV parsing and result-table serialization.

Dialect: comma separator, LF line endings, mandatory header, UTF-8.
Panel files look like::

    date,s1,s2
    1988-01,100.0,98.2
    1988-02,101.0,97.9
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np

_DATE_RE = re.compile(r"^(\d{4})-(\d{2})$")
MIN_MONTHS = 4


class PanelFormatError(ValueError):
    """Raised when a panel file violates the dialect or a Panel invariant.

    ``row`` and ``column`` are 1-based file positions (the header is row 1),
    or None when the error is not tied to a single cell.
    """

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


def month_index(date: str) -> int:
    """Months since year 0 for a ``YYYY-MM`` label."""
    m = _DATE_RE.match(date)
    if m is None:
        raise ValueError(f"bad date {date!r}, expected YYYY-MM")
    year, month = int(m.group(1)), int(m.group(2))
    if not 1 <= month <= 12:
        raise ValueError(f"bad month in {date!r}")
    return 12 * year + (month - 1)


def month_label(index: int) -> str:
    year, month = divmod(index, 12)
    return f"{year:04d}-{month + 1:02d}"


def monthly_dates(start: str, n: int) -> tuple[str, ...]:
    """``n`` consecutive month labels beginning at ``start``."""
    first = month_index(start)
    return tuple(month_label(first + k) for k in range(n))


@dataclass(frozen=True)
class Panel:
    """Sector index levels on a shared monthly grid.

    ``levels`` has shape ``(len(dates), len(sector_ids))``.
    """

    sector_ids: tuple[str, ...]
    dates: tuple[str, ...]
    levels: np.ndarray = field(repr=False)

    def __post_init__(self):
        ids = tuple(str(s) for s in self.sector_ids)
        dates = tuple(self.dates)
        levels = np.array(self.levels, dtype=float, copy=True)
        if levels.ndim == 1:
            levels = levels[:, None]
        object.__setattr__(self, "sector_ids", ids)
        object.__setattr__(self, "dates", dates)
        if not ids:
            raise PanelFormatError("panel needs at least one sector")
        if any(not s for s in ids):
            raise PanelFormatError("empty sector id")
        if len(set(ids)) != len(ids):
            raise PanelFormatError("duplicate sector ids")
        if len(dates) < MIN_MONTHS:
            raise PanelFormatError(f"panel needs at least {MIN_MONTHS} months, got {len(dates)}")
        if levels.shape != (len(dates), len(ids)):
            raise PanelFormatError(
                f"levels shape {levels.shape} does not match {len(dates)} dates x {len(ids)} sectors"
            )
        idx = [month_index(d) for d in dates]
        for k in range(1, len(idx)):
            if idx[k] != idx[k - 1] + 1:
                raise PanelFormatError(f"dates {dates[k - 1]} -> {dates[k]} are not consecutive months")
        if not np.all(np.isfinite(levels)) or np.any(levels <= 0):
            raise PanelFormatError("levels must be finite and positive")
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    @property
    def n_months(self) -> int:
        return len(self.dates)

    @property
    def n_sectors(self) -> int:
        return len(self.sector_ids)

    def column(self, sector: str) -> np.ndarray:
        return self.levels[:, self.sector_ids.index(sector)]


def parse_panel_csv(text: str | IO[str]) -> Panel:
    """Parse a panel CSV document.

    Every violation is reported as a :class:`PanelFormatError` carrying the
    offending row (and column where applicable).
    """
    if not isinstance(text, str):
        text = text.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise PanelFormatError("empty input", row=1)
    rows = [_split_row(line, k + 1) for k, line in enumerate(lines)]

    header = rows[0]
    if len(header) < 2 or header[0] != "date":
        raise PanelFormatError("header must be 'date,<id1>,...,<idS>'", row=1)
    ids = header[1:]
    for j, sid in enumerate(ids):
        if not sid:
            raise PanelFormatError("empty sector id", row=1, column=j + 2)
        if sid in ids[:j]:
            raise PanelFormatError(f"duplicate sector id {sid!r}", row=1, column=j + 2)

    dates: list[str] = []
    values = np.empty((len(rows) - 1, len(ids)))
    prev = None
    for r, row in enumerate(rows[1:]):
        rownum = r + 2
        if len(row) != len(header):
            raise PanelFormatError(f"expected {len(header)} fields, got {len(row)}", row=rownum)
        try:
            idx = month_index(row[0])
        except ValueError as exc:
            raise PanelFormatError(str(exc), row=rownum, column=1) from None
        if prev is not None and idx != prev + 1:
            kind = "gap" if idx > prev + 1 else "non-increasing month"
            raise PanelFormatError(f"{kind}: {row[0]} follows {month_label(prev)}", row=rownum, column=1)
        prev = idx
        dates.append(row[0])
        for j, cell in enumerate(row[1:]):
            v = _parse_number(cell, rownum, j + 2)
            if not v > 0:
                raise PanelFormatError(f"non-positive level {cell!r}", row=rownum, column=j + 2)
            values[r, j] = v

    if len(dates) < MIN_MONTHS:
        raise PanelFormatError(f"panel needs at least {MIN_MONTHS} months, got {len(dates)}")
    return Panel(tuple(ids), tuple(dates), values)


def _split_row(line: str, rownum: int) -> list[str]:
    if line.endswith("\r"):
        raise PanelFormatError("CR line ending; only LF is accepted", row=rownum)
    return next(csv.reader([line], strict=True)) if line else []


def _parse_number(cell: str, row: int, column: int) -> float:
    try:
        v = float(cell)
    except ValueError:
        raise PanelFormatError(f"non-numeric value {cell!r}", row=row, column=column) from None
    if not math.isfinite(v):
        raise PanelFormatError(f"non-finite value {cell!r}", row=row, column=column)
    return v


def format_number(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".17g")


def write_table_csv(column_names: Sequence[str], columns: Sequence[Iterable], destination: IO[str]) -> None:
    """Write equal-length columns as a CSV table.

    Floats are rendered with 17 significant digits so a re-parse reproduces
    them exactly. String cells (e.g. sector labels) are written verbatim.
    """
    names = [str(n) for n in column_names]
    if len(set(names)) != len(names):
        raise ValueError("column names must be unique")
    cols = [list(c) for c in columns]
    if len(cols) != len(names):
        raise ValueError(f"{len(names)} names but {len(cols)} columns")
    lengths = {len(c) for c in cols}
    if len(lengths) > 1:
        raise ValueError(f"columns have unequal lengths {sorted(lengths)}")
    n = lengths.pop() if lengths else 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for i in range(n):
        writer.writerow([format_number(c[i]) for c in cols])
    destination.write(buf.getvalue())


def read_table_csv(text: str | IO[str]) -> dict[str, np.ndarray]:
    """Read a table written by :func:`write_table_csv`.

    Columns whose cells all parse as numbers come back as float arrays,
    anything else as an object array of strings.
    """
    if not isinstance(text, str):
        text = text.read()
    rows = list(csv.reader(io.StringIO(text), strict=True))
    if not rows:
        raise ValueError("empty table")
    names = rows[0]
    body = rows[1:]
    for k, row in enumerate(body):
        if len(row) != len(names):
            raise ValueError(f"row {k + 2}: expected {len(names)} fields, got {len(row)}")
    out: dict[str, np.ndarray] = {}
    for j, name in enumerate(names):
        cells = [row[j] for row in body]
        try:
            out[name] = np.array([float(c) for c in cells], dtype=float)
        except ValueError:
            out[name] = np.array(cells, dtype=object)
    return out


def write_panel_csv(panel: Panel, destination: IO[str]) -> None:
    write_table_csv(
        ["date", *panel.sector_ids],
        [list(panel.dates), *(panel.levels[:, j] for j in range(panel.n_sectors))],
        destination,
    )


def panel_to_text(panel: Panel) -> str:
    buf = io.StringIO()
    write_panel_csv(panel, buf)
    return buf.getvalue()
