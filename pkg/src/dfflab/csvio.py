"""Deterministic CSV emission and parsing.

Floats are written with 17 significant digits (round-trip exact for doubles),
files are written atomically (temp file in the target directory, then rename),
and no timestamps or environment details ever enter a data file, so reruns
are byte-identical.
"""
from __future__ import annotations

import csv
import io
import os
from typing import Iterable, Optional, Sequence

from .density import DensityDistribution
from .errors import ValidationError


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    return format(float(value), ".17g")


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> int:
    """Writes header + rows atomically; returns the number of data rows."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    count = 0
    for row in rows:
        writer.writerow([format_value(v) for v in row])
        count += 1
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="ascii", newline="") as fh:
        fh.write(buf.getvalue())
    os.replace(tmp, path)
    return count


def read_rows(path: str) -> tuple[list[str], list[list[str]]]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValidationError(f"{path}: empty file") from None
        return header, [row for row in reader]


def read_density_csv(path: str, at: Optional[float] = None) -> DensityDistribution:
    """Density from a 2-column (label, weight) file or a 3-column sweep file.

    Sweep files (parameter, label, weight) need `at` to select one parameter
    slice; the match is exact up to 1e-12, which the 17-digit emission
    guarantees for values that came from this package.
    """
    header, rows = read_rows(path)
    if len(header) == 2:
        if at is not None:
            raise ValidationError(f"{path}: slice selector given for a 2-column file")
        picked = rows
        label_col, weight_col = 0, 1
    elif len(header) == 3:
        if at is None:
            raise ValidationError(
                f"{path}: 3-column sweep file needs a parameter slice (columns: {', '.join(header)})"
            )
        picked = [r for r in rows if abs(float(r[0]) - at) <= 1e-12]
        if not picked:
            raise ValidationError(f"{path}: no rows with {header[0]} = {at!r}")
        label_col, weight_col = 1, 2
    else:
        raise ValidationError(f"{path}: expected 2 or 3 columns, found {len(header)}")
    try:
        labels = [float(r[label_col]) for r in picked]
        weights = [float(r[weight_col]) for r in picked]
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"{path}: malformed row ({exc})") from exc
    return DensityDistribution(labels, weights)
