"""Stable tabular artifacts: CSV and JSON writers with lossless floats.

Every float is serialized with 17 significant digits, which round-trips
binary64 exactly, and every writer emits columns in a fixed order so
repeated runs diff cleanly. Two schemas cover all commands: the
diagnostic envelope (shared by eval, diag, and sweep-u) and the zero
candidate table. wall_time_ms is measured data and is the one column
allowed to differ between otherwise identical runs.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

# Fixed column order of the diagnostic envelope.
DIAG_COLUMNS = (
    "experiment_id",
    "sigma",
    "t",
    "N",
    "P_N",
    "T_N",
    "S_N",
    "eta_abs_sq",
    "identity_residual",
    "extra",
    "wall_time_ms",
)

# Zero candidate table: scan output plus equivalence and symmetry checks.
ZERO_COLUMNS = (
    "experiment_id",
    "t_lo",
    "t_hi",
    "refined_t",
    "iterations",
    "z_residual",
    "eta_residual",
    "zeta_residual",
    "eta_abs",
    "zeta_abs",
    "factor_abs",
    "verdict",
    "conjugate_residual",
    "wall_time_ms",
)

_INT_COLUMNS = frozenset({"N", "iterations", "wall_time_ms"})
_TEXT_COLUMNS = frozenset({"experiment_id", "extra", "verdict"})

FORMATS = ("csv", "json")


def fmt17(x: float) -> str:
    """17-significant-digit text; float(fmt17(x)) == x for finite binary64."""
    return f"{float(x):.17g}"


@dataclass(frozen=True)
class SweepConfig:
    """Validated inputs of a diagnostic sweep."""

    sigma_grid: tuple
    t_values: tuple
    n_list: tuple
    output_path: str
    format: str = "csv"
    seed: int = 42

    def __post_init__(self):
        if not self.sigma_grid:
            raise ValueError("sigma_grid must be non-empty")
        if not self.t_values:
            raise ValueError("t_values must be non-empty")
        ns = list(self.n_list)
        if not ns:
            raise ValueError("n_list must be non-empty")
        if any(int(n) != n or n < 1 for n in ns):
            raise ValueError(f"n_list must hold positive integers, got {ns}")
        if sorted(ns) != ns or len(set(ns)) != len(ns):
            raise ValueError(f"n_list must be strictly increasing, got {ns}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")


@dataclass(frozen=True)
class ReportRow:
    """One experiment row: an id, the flat column values, and a timing.

    values maps column names (minus experiment_id and wall_time_ms) to
    floats, ints, strings, or None for a column left empty.
    """

    experiment_id: str
    values: dict = field(default_factory=dict)
    wall_time_ms: int = 0

    def flat(self, columns) -> dict:
        row = dict(self.values)
        row["experiment_id"] = self.experiment_id
        row["wall_time_ms"] = self.wall_time_ms
        return {name: row.get(name) for name in columns}


def _cell_text(value) -> str:
    """CSV cell for one value; empty cell encodes None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt17(value)
    return str(value)


def write_csv(path: str, columns, rows) -> None:
    """RFC-4180-style CSV: header row, LF line endings, UTF-8."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell_text(row.get(name)) for name in columns])


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return "null"  # JSON has no non-finite literals
        return fmt17(value)
    return json.dumps(value, ensure_ascii=False)


def write_json(path: str, columns, rows) -> None:
    """Array of row objects with keys in column order, floats at 17 digits.

    Hand-rolled emission: the stdlib encoder formats floats with repr,
    and the 17-digit schema promise is easier to keep than to retrofit.
    """
    lines = []
    for row in rows:
        cells = ", ".join(
            f"{json.dumps(name)}: {_json_scalar(row.get(name))}" for name in columns
        )
        lines.append("  {" + cells + "}")
    body = ",\n".join(lines)
    text = "[\n" + body + "\n]\n" if lines else "[]\n"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_rows(path: str, columns, rows, fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "csv":
        write_csv(path, columns, rows)
    else:
        write_json(path, columns, rows)


def _parse_cell(name: str, text):
    """Invert _cell_text using the column's declared type."""
    if text is None:
        return None
    if name in _TEXT_COLUMNS:
        return text if text != "" else None
    if text == "":
        return None
    if name in _INT_COLUMNS:
        return int(text)
    return float(text)


def read_rows(path: str, fmt: str):
    """Read a report file back to (columns, rows-with-python-values)."""
    if fmt == "csv":
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            rows = [
                {name: _parse_cell(name, cell) for name, cell in zip(header, line)}
                for line in reader
            ]
        return tuple(header), rows
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not data:
        return (), []
    header = tuple(data[0].keys())
    rows = []
    for obj in data:
        parsed = {}
        for name, value in obj.items():
            if isinstance(value, str) and name not in _TEXT_COLUMNS:
                parsed[name] = _parse_cell(name, value)
            else:
                parsed[name] = value
        rows.append(parsed)
    return header, rows


def rows_equal_ignoring_timing(a, b) -> bool:
    """Row-list equality modulo the wall_time_ms column."""
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        ka = {k: v for k, v in ra.items() if k != "wall_time_ms"}
        kb = {k: v for k, v in rb.items() if k != "wall_time_ms"}
        if ka != kb:
            return False
    return True
