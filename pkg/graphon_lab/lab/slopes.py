"""Log-log slope fits of per-N means."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path

import attr
import numpy as np

from ..const import MIN_SLOPE_POINTS
from ..exceptions import InsufficientDataException
from ..utils.csv_io import write_rows
from .records import RunRecord, aggregate_means


@attr.s(auto_attribs=True, frozen=True)
class SlopeFit:
    """Least squares fit of log(mean) against log(N)."""

    metric: str
    slope: float
    intercept: float
    r_squared: float
    n_range: tuple[int, int]
    points: int


def fit_slope(
    records: Iterable[RunRecord],
    metric: str,
    n_range: tuple[int, int] | None = None,
    min_points: int = MIN_SLOPE_POINTS,
) -> SlopeFit:
    """Fit the slope of the per-N mean of a metric on log-log axes."""
    means = {
        n: mean
        for n, (mean, _) in aggregate_means(records, metric).items()
        if mean > 0 and (n_range is None or n_range[0] <= n <= n_range[1])
    }
    if len(means) < min_points:
        raise InsufficientDataException(
            f"{metric}: {len(means)} usable N values, at least {min_points} required"
        )
    x = np.log(np.fromiter(means.keys(), dtype=float))
    y = np.log(np.fromiter(means.values(), dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = np.sum((y - y.mean()) ** 2)
    r_squared = 1.0 - float(np.sum(residual**2) / total) if total > 0 else 1.0
    return SlopeFit(
        metric=metric,
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        n_range=(min(means), max(means)),
        points=len(means),
    )


def write_slopes(fits: Sequence[SlopeFit], path: str | Path, master_seed: int) -> Path:
    """slopes.csv."""
    return write_rows(
        path,
        ("metric", "slope", "intercept", "r_squared", "n_min", "n_max", "points"),
        (
            [fit.metric, fit.slope, fit.intercept, fit.r_squared, *fit.n_range, fit.points]
            for fit in fits
        ),
        master_seed,
    )
