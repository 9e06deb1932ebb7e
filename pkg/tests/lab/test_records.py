"""Run record tests."""

import math

from graphon_lab.enums import RecordStatus
from graphon_lab.lab.records import (
    RunRecord,
    aggregate_means,
    coverage_summary,
    metric_columns,
    sorted_records,
    write_coverage,
    write_records,
    write_timings,
)
from graphon_lab.utils.csv_io import read_rows


def _records() -> list[RunRecord]:
    return [
        RunRecord(n=20, trial=1, values={"a": 3.0, "prop1_holds": True}, wall_time=0.5),
        RunRecord(
            n=10,
            trial=0,
            latent_seed=1,
            thinning_seed=2,
            values={"a": 1.0, "b": True, "prop1_holds": False, "prop1_coverage_target": 0.8},
        ),
        RunRecord(n=10, trial=1, values={"a": 2.0, "prop1_holds": True}),
        RunRecord(n=20, trial=0, values={"a": math.nan}, errors=["thm1: boom"]),
        RunRecord(n=30, trial=0, errors=["sample: boom"]),
    ]


def test_status_and_values():
    records = _records()
    assert records[0].status == RecordStatus.OK
    assert records[3].status == RecordStatus.PARTIAL
    assert records[4].status == RecordStatus.FAILED
    assert records[1].value("a") == 1.0
    assert math.isnan(records[1].value("b"))
    assert math.isnan(records[4].value("a"))


def test_sorting_and_columns():
    records = sorted_records(_records())
    assert [record.sort_key for record in records] == [(10, 0), (10, 1), (20, 0), (20, 1), (30, 0)]
    assert metric_columns(records) == ["a", "b", "prop1_coverage_target", "prop1_holds"]


def test_aggregate_means():
    assert aggregate_means(_records(), "a") == {10: (1.5, 2), 20: (3.0, 1)}
    assert aggregate_means(_records(), "missing") == {}


def test_coverage_summary():
    rows = coverage_summary(_records())
    assert rows == [
        {
            "n": 10,
            "result": "prop1",
            "trials": 2,
            "held": 1,
            "frequency": 0.5,
            "target": 0.8,
            "meets_target": False,
        },
        {
            "n": 20,
            "result": "prop1",
            "trials": 1,
            "held": 1,
            "frequency": 1.0,
            "target": rows[1]["target"],
            "meets_target": None,
        },
    ]
    assert math.isnan(rows[1]["target"])


def test_write_records(tmp_path):
    path = write_records(_records(), tmp_path / "records.csv", 7)
    comment, header, rows = read_rows(path)
    assert comment == {"master_seed": "7"}
    assert header == [
        "n",
        "trial",
        "latent_seed",
        "thinning_seed",
        "status",
        "error",
        "a",
        "b",
        "prop1_coverage_target",
        "prop1_holds",
    ]
    assert rows[0] == ["10", "0", "1", "2", "ok", "", "1.0", "true", "0.8", "false"]
    assert rows[2][4:7] == ["partial", "thm1: boom", "nan"]
    assert rows[4][4:6] == ["failed", "sample: boom"]
    assert "wall_time" not in header


def test_write_timings_and_coverage(tmp_path):
    _, header, rows = read_rows(write_timings(_records(), tmp_path / "timings.csv", 7))
    assert header == ["n", "trial", "wall_time"]
    assert rows[3] == ["20", "1", "0.5"]

    _, header, rows = read_rows(write_coverage(_records(), tmp_path / "coverage.csv", 7))
    assert header[:2] == ["n", "result"]
    assert rows[0] == ["10", "prop1", "2", "1", "0.5", "0.8", "false"]
