"""Experiment runner tests."""

import math

import pytest

from graphon_lab.enums import Metric, RecordStatus
from graphon_lab.exceptions import GraphonValidationException
from graphon_lab.graphons import CustomGraphon, graphon_from_manifest
from graphon_lab.lab.metrics import run_trial
from graphon_lab.lab.plan import ExperimentPlan, load_plan
from graphon_lab.lab.runner import ExperimentRunner, run_plan, write_outputs
from graphon_lab.lab.slopes import fit_slope

from tests.common import fixture


def _plan(**overrides) -> ExperimentPlan:
    data = {
        "preset": "bilinear_decay",
        "n_grid": [12, 20],
        "trials_per_n": 2,
        "master_seed": 3,
        "nu": 0.1,
        "metrics": ["prop1", "mu2_pair"],
        "configuration": {"nystrom_resolution": 64},
    }
    data.update(overrides)
    return ExperimentPlan.from_dict({key: value for key, value in data.items() if value is not None})


def test_run_plan_records():
    records = run_plan(_plan())
    assert [record.sort_key for record in records] == [(12, 0), (12, 1), (20, 0), (20, 1)]
    for record in records:
        assert record.status == RecordStatus.OK
        assert record.latent_seed is not None
        assert record.values["prop1_lhs"] >= 0
        assert record.values["limit_mu2"] == pytest.approx(0.6)
        assert record.values["prop3_holds"] is True
        assert "thm1_lhs" not in record.values


def test_build_context():
    runner = ExperimentRunner(_plan(metrics=["bounds"]))
    context = runner.build_context()
    assert context.operator_norm == pytest.approx(0.81512, abs=1e-4)
    assert context.limit_mu2 is None


def test_runner_rejects_invalid_graphons():
    graphon = CustomGraphon(function=lambda x, y: 0.2 + 0.6 * x * y**2, lipschitz_L=2.0)
    with pytest.raises(GraphonValidationException):
        run_plan(_plan(), graphon=graphon)


async def test_async_run(caplog):
    runner = ExperimentRunner(_plan(n_grid=[10], trials_per_n=3))
    records = await runner.async_run()
    assert len(records) == 3
    assert "<Runner> N=10 trial=2 done" in caplog.text
    assert not runner.queue.has_pending_tasks


def test_runs_are_reproducible(tmp_path):
    plan = load_plan(fixture("small_plan.json"))
    first = write_outputs(run_plan(plan), plan, tmp_path / "first")
    second = write_outputs(run_plan(plan), plan, tmp_path / "second")

    assert [path.name for path in first] == ["records.csv", "timings.csv", "coverage.csv"]
    for left, right in zip(first, second):
        if left.name == "timings.csv":
            continue
        assert left.read_bytes() == right.read_bytes()


def test_metric_failures_are_isolated():
    # A graph on two nodes with tiny weights is almost surely disconnected.
    plan = _plan(
        preset="constant",
        n_grid=[2],
        trials_per_n=1,
        metrics=["prop1", "resistance"],
    )
    graphon = CustomGraphon(function=lambda x, y: 1e-9 + 0.0 * x * y)
    records = run_plan(plan, graphon=graphon)
    assert records[0].status == RecordStatus.PARTIAL
    assert records[0].errors[0].startswith(f"{Metric.RESISTANCE}:")
    assert not math.isnan(records[0].value("prop1_lhs"))


SLOW_SWEEP_GRID = [16, 32, 64, 128, 256, 512, 1024]


@pytest.mark.slow
def test_bilinear_sweep_slopes():
    plan = _plan(
        n_grid=SLOW_SWEEP_GRID,
        trials_per_n=10,
        metrics=["thm1", "mu2_pair", "resistance"],
        configuration={},
    )
    records = run_plan(plan)
    assert all(record.status == RecordStatus.OK for record in records)

    # Sorted latents make these decay near N^(-1/2), faster than the N^(-1/4) bound.
    assert -0.75 <= fit_slope(records, "thm1_lhs").slope <= -0.15
    assert -0.75 <= fit_slope(records, "r_rel_error").slope <= -0.10
    assert -0.7 <= fit_slope(records, "mu2_diff").slope <= -0.3

    largest = [record.value("mu2_bar") for record in records if record.n == 1024]
    assert abs(sum(largest) / len(largest) - 0.6) <= 0.1


def test_configured_extrema_grid_step():
    graphon = CustomGraphon(function=lambda x, y: 1.0 - 0.8 * x * y, lipschitz_L=0.8)
    runner = ExperimentRunner(
        _plan(configuration={"extrema_grid_step": 0.1}), graphon=graphon
    )
    assert runner.graphon.extrema_grid_step == 0.1
    assert runner.graphon.extrema.grid_step == 0.1
    assert graphon.extrema.grid_step == 1e-3


def test_manifest_nu_reaches_bounds():
    graphon = graphon_from_manifest({"family": "bilinear", "params": {"a": 0.8}, "nu": 0.05})
    context = ExperimentRunner(_plan(nu=None, metrics=["bounds"]), graphon=graphon).build_context()
    assert context.nu == 0.05
    record = run_trial(context, 40, 0)
    assert record.values["thm1_coverage_target"] == pytest.approx(1 - 3 * 0.05)
    assert record.values["thm2_coverage_target"] == pytest.approx(1 - 3 * 0.05)

    context = ExperimentRunner(_plan(nu=0.2, metrics=["bounds"]), graphon=graphon).build_context()
    assert context.nu == 0.2


def test_run_trial_wall_time(time_freezer):
    context = ExperimentRunner(_plan()).build_context()
    record = run_trial(context, 12, 0)
    assert record.wall_time == 0.0
    assert record.thinning_seed is not None
    assert 0.0 <= record.values["edge_density"] <= 1.0
