"""Slope fit tests."""

import math

import pytest

from graphon_lab.exceptions import InsufficientDataException
from graphon_lab.lab.records import RunRecord
from graphon_lab.lab.slopes import fit_slope, write_slopes
from graphon_lab.utils.csv_io import read_rows

N_GRID = (16, 32, 64, 128, 256, 512, 1024)


def _records(function) -> list[RunRecord]:
    return [
        RunRecord(n=n, trial=trial, values={"metric": function(n) * (1 + 0.01 * trial)})
        for n in N_GRID
        for trial in range(3)
    ]


def test_power_law_slope():
    fit = fit_slope(_records(lambda n: 2.0 * n**-0.25), "metric")
    assert fit.slope == pytest.approx(-0.25)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.n_range == (16, 1024)
    assert fit.points == 7


def test_log_rate_slope():
    fit = fit_slope(_records(lambda n: 0.3 * math.sqrt(math.log(n) / n)), "metric")
    assert -0.5 < fit.slope < -0.35


def test_slope_window():
    fit = fit_slope(_records(lambda n: n**-0.5), "metric", n_range=(64, 1024))
    assert fit.n_range == (64, 1024)
    assert fit.points == 5

    with pytest.raises(InsufficientDataException):
        fit_slope(_records(lambda n: n**-0.5), "metric", n_range=(512, 1024))


def test_non_positive_means_are_skipped():
    with pytest.raises(InsufficientDataException):
        fit_slope(_records(lambda n: 0.0), "metric")


def test_write_slopes(tmp_path):
    fit = fit_slope(_records(lambda n: n**-0.25), "metric")
    _, header, rows = read_rows(write_slopes([fit], tmp_path / "slopes.csv", 3))
    assert header == ["metric", "slope", "intercept", "r_squared", "n_min", "n_max", "points"]
    assert rows[0][0] == "metric"
    assert rows[0][4:] == ["16", "1024", "7"]
