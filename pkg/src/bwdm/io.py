"""CSV ingestion and bundled example datasets."""

from __future__ import annotations

import csv
from importlib import resources

import numpy as np

FIXTURES = ("faithful", "iris")


def fixture_path(name: str):
    """Filesystem path of a bundled dataset ("faithful" or "iris")."""
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURES}")
    return resources.files("bwdm.data") / f"{name}.csv"


def load_csv(path, has_header: bool | None = None, drop_columns=()) -> np.ndarray:
    """Load a delimited numeric table as an (n, d) float matrix.

    ``has_header=None`` sniffs: if any cell of the first row fails to parse
    as a number, the row is taken as a header. ``drop_columns`` names header
    columns to discard (e.g. a species label) and requires a header.
    """
    drop_columns = list(drop_columns)
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    if not rows:
        raise ValueError(f"{path}: empty file")

    def parses(cell: str) -> bool:
        try:
            float(cell)
            return True
        except ValueError:
            return False

    if has_header is None:
        has_header = not all(parses(c) for c in rows[0])

    if has_header:
        header = [c.strip() for c in rows[0]]
        rows = rows[1:]
        if not rows:
            raise ValueError(f"{path}: header but no data rows")
    else:
        header = [f"col{i}" for i in range(len(rows[0]))]
        if drop_columns:
            raise ValueError("drop_columns requires a header row")

    missing = [c for c in drop_columns if c not in header]
    if missing:
        raise ValueError(f"{path}: columns to drop not found: {missing}")
    keep = [i for i, name in enumerate(header) if name not in drop_columns]
    if not keep:
        raise ValueError(f"{path}: all columns dropped")

    width = len(header)
    data = np.empty((len(rows), len(keep)))
    for r, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(
                f"{path}: row {r + 1} has {len(row)} fields, expected {width}"
            )
        for out_c, c in enumerate(keep):
            cell = row[c].strip()
            try:
                value = float(cell)
            except ValueError:
                raise ValueError(
                    f"{path}: non-numeric value {cell!r} at row {r + 1}, "
                    f"column {header[c]!r}"
                ) from None
            if not np.isfinite(value):
                raise ValueError(
                    f"{path}: non-finite value at row {r + 1}, column {header[c]!r}"
                )
            data[r, out_c] = value
    return data


def load_fixture(name: str) -> np.ndarray:
    """Load a bundled dataset; the iris species column is dropped."""
    drop = ["species"] if name == "iris" else []
    return load_csv(fixture_path(name), has_header=True, drop_columns=drop)


def write_labeled_csv(path_or_file, data: np.ndarray, labels: np.ndarray) -> None:
    """Write points plus a trailing integer label column."""
    d = data.shape[1]
    header = [f"x{i + 1}" for i in range(d)] + ["label"]

    def emit(fh):
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row, lab in zip(data, labels):
            writer.writerow([repr(float(v)) for v in row] + [int(lab)])

    if hasattr(path_or_file, "write"):
        emit(path_or_file)
    else:
        with open(path_or_file, "w", newline="") as fh:
            emit(fh)
