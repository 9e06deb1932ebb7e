"""CSV helpers, every file starts with a provenance comment."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
import csv
from pathlib import Path
from typing import Any

import numpy as np

from ..const import CSV_COMMENT_PREFIX, VERSION
from ..exceptions import GraphonManifestException


def format_value(value: Any) -> str:
    """Format a cell, floats with repr so they round trip."""
    if value is None:
        return ""
    if isinstance(value, bool | np.bool_):
        return "true" if value else "false"
    if isinstance(value, float | np.floating):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def comment_line(master_seed: int | None = None, **extra: Any) -> str:
    """Return the provenance comment, without newline."""
    parts = [f"{CSV_COMMENT_PREFIX} {VERSION}"]
    if master_seed is not None:
        parts.append(f"master_seed={master_seed}")
    parts.extend(f"{key}={format_value(value)}" for key, value in extra.items())
    return " ".join(parts)


def parse_comment_line(line: str) -> dict[str, str]:
    """Return the key=value pairs of a provenance comment."""
    if not line.startswith(CSV_COMMENT_PREFIX):
        return {}
    return dict(part.split("=", 1) for part in line.split()[2:] if "=" in part)


def write_rows(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    master_seed: int | None = None,
    **extra: Any,
) -> Path:
    """Write a CSV file with a provenance comment and a header row."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        handle.write(comment_line(master_seed, **extra) + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([format_value(value) for value in row] for row in rows)
    return path


def read_rows(path: str | Path) -> tuple[dict[str, str], list[str], list[list[str]]]:
    """Read a file written by write_rows, return (comment, header, rows)."""
    path = Path(path)
    if not path.exists():
        raise GraphonManifestException(f"File {path} does not exist")
    with path.open(newline="", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    comment: dict[str, str] = {}
    while lines and lines[0].startswith("#"):
        comment.update(parse_comment_line(lines.pop(0)))
    reader = list(csv.reader(lines))
    if not reader:
        raise GraphonManifestException(f"File {path} has no header row")
    return comment, reader[0], reader[1:]


def write_matrix(path: str | Path, matrix: np.ndarray, master_seed: int | None = None) -> Path:
    """Write a dense matrix, one row per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        handle.write(comment_line(master_seed, rows=matrix.shape[0]) + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerows([format_value(value) for value in row] for row in matrix)
    return path


def read_matrix(path: str | Path) -> np.ndarray:
    """Read a dense numeric matrix, '#' lines are ignored."""
    try:
        return np.atleast_2d(np.loadtxt(path, delimiter=",", comments="#", dtype=float))
    except ValueError as exception:
        raise GraphonManifestException(f"File {path} is not a numeric matrix") from exception
