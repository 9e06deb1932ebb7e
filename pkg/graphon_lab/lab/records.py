"""Run records and their CSV outputs."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Sequence
import math
from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..enums import BoundResult, RecordStatus
from ..utils.csv_io import write_rows

RECORD_KEY_FIELDS = ("n", "trial", "latent_seed", "thinning_seed", "status", "error")


@attr.s(auto_attribs=True, kw_only=True)
class RunRecord:
    """Metrics of one (N, trial) pair."""

    n: int
    trial: int
    latent_seed: int | None = None
    thinning_seed: int | None = None
    values: dict[str, Any] = attr.ib(factory=dict)
    errors: list[str] = attr.ib(factory=list)
    wall_time: float = 0.0

    @property
    def status(self) -> RecordStatus:
        """ok, partial (some metrics failed) or failed (all of them did)."""
        if not self.errors:
            return RecordStatus.OK
        return RecordStatus.PARTIAL if self.values else RecordStatus.FAILED

    @property
    def sort_key(self) -> tuple[int, int]:
        """Output order."""
        return (self.n, self.trial)

    def value(self, name: str) -> float:
        """Numeric value of a metric, nan when missing."""
        value = self.values.get(name)
        if value is None or isinstance(value, bool):
            return math.nan
        return float(value)


def sorted_records(records: Iterable[RunRecord]) -> list[RunRecord]:
    """Records ordered by (N, trial)."""
    return sorted(records, key=lambda record: record.sort_key)


def metric_columns(records: Sequence[RunRecord]) -> list[str]:
    """Union of metric names, sorted."""
    return sorted({name for record in records for name in record.values})


def write_records(records: Sequence[RunRecord], path: str | Path, master_seed: int) -> Path:
    """records.csv, one row per (N, trial), wall time excluded."""
    records = sorted_records(records)
    columns = metric_columns(records)
    return write_rows(
        path,
        [*RECORD_KEY_FIELDS, *columns],
        (
            [
                record.n,
                record.trial,
                record.latent_seed,
                record.thinning_seed,
                record.status,
                " | ".join(record.errors) or None,
                *(record.values.get(column) for column in columns),
            ]
            for record in records
        ),
        master_seed,
    )


def write_timings(records: Sequence[RunRecord], path: str | Path, master_seed: int) -> Path:
    """timings.csv, wall time per (N, trial)."""
    return write_rows(
        path,
        ("n", "trial", "wall_time"),
        ([record.n, record.trial, record.wall_time] for record in sorted_records(records)),
        master_seed,
    )


def aggregate_means(records: Iterable[RunRecord], metric: str) -> dict[int, tuple[float, int]]:
    """Mean of a metric per N over the finite values, with the count used."""
    grouped: dict[int, list[float]] = defaultdict(list)
    for record in records:
        if math.isfinite(value := record.value(metric)):
            grouped[record.n].append(value)
    return {n: (float(np.mean(values)), len(values)) for n, values in sorted(grouped.items())}


def coverage_summary(records: Iterable[RunRecord]) -> list[dict[str, Any]]:
    """Per N and bound: how often it held against the target probability."""
    held: dict[tuple[int, BoundResult], list[bool]] = defaultdict(list)
    targets: dict[tuple[int, BoundResult], float] = {}
    for record in records:
        for result in BoundResult:
            outcome = record.values.get(f"{result}_holds")
            if outcome is None:
                continue
            held[(record.n, result)].append(bool(outcome))
            if (target := record.values.get(f"{result}_coverage_target")) is not None:
                targets[(record.n, result)] = float(target)
    rows = []
    for (n, result), outcomes in sorted(held.items()):
        frequency = sum(outcomes) / len(outcomes)
        target = targets.get((n, result), math.nan)
        rows.append(
            {
                "n": n,
                "result": str(result),
                "trials": len(outcomes),
                "held": sum(outcomes),
                "frequency": frequency,
                "target": target,
                "meets_target": None if math.isnan(target) else frequency >= target,
            }
        )
    return rows


COVERAGE_FIELDS = ("n", "result", "trials", "held", "frequency", "target", "meets_target")


def write_coverage(records: Iterable[RunRecord], path: str | Path, master_seed: int) -> Path:
    """coverage.csv."""
    return write_rows(
        path,
        COVERAGE_FIELDS,
        ([row[field] for field in COVERAGE_FIELDS] for row in coverage_summary(records)),
        master_seed,
    )
