"""Run experiment plans."""

from __future__ import annotations

import asyncio
from pathlib import Path

import attr

from ..base import LabConfiguration
from ..core import graphon_laplacian_spectrum, operator_norm
from ..enums import Metric
from ..graphons.base import Graphon
from ..utils.decorator import concurrent
from ..utils.logger import LOGGER
from ..utils.queue_manager import QueueManager
from ..validate.manager import ValidationManager
from .metrics import TrialContext, run_trial
from .plan import ExperimentPlan
from .records import RunRecord, sorted_records, write_coverage, write_records, write_timings


class ExperimentRunner:
    """Run every (N, trial) pair of a plan on a worker pool."""

    def __init__(
        self,
        plan: ExperimentPlan,
        graphon: Graphon | None = None,
        configuration: LabConfiguration | None = None,
    ) -> None:
        self.plan = plan
        self.configuration = configuration or plan.lab_configuration()
        graphon = graphon or plan.load_graphon()
        if graphon.extrema_grid_step != self.configuration.extrema_grid_step:
            graphon = attr.evolve(graphon, extrema_grid_step=self.configuration.extrema_grid_step)
        self.graphon = graphon
        self.queue = QueueManager()
        self.records: list[RunRecord] = []
        self._lock = asyncio.Lock()
        self._completed = 0
        self._run_trial = concurrent(self.configuration.concurrent_tasks)(self._async_run_trial)

    def build_context(self) -> TrialContext:
        """Compute the graphon constants shared by all trials."""
        config = self.configuration
        norm = None
        limit = None
        if Metric.BOUNDS in self.plan.metrics:
            norm = operator_norm(
                self.graphon,
                config.operator_norm_resolution,
                tol=config.operator_norm_tol,
                cap=config.operator_norm_cap,
            ).operator_norm
        if Metric.MU2_PAIR in self.plan.metrics:
            limit = graphon_laplacian_spectrum(
                self.graphon, config.nystrom_resolution, config.separation_tol
            ).limit_mu2
        return TrialContext(
            graphon=self.graphon,
            plan=self.plan,
            configuration=config,
            nu=self.graphon.resolve_nu(self.plan.nu),
            operator_norm=norm,
            limit_mu2=limit,
        )

    async def _async_run_trial(self, context: TrialContext, n: int, trial: int) -> None:
        record = await asyncio.to_thread(run_trial, context, n, trial)
        async with self._lock:
            self.records.append(record)
            self._completed += 1
            completed = self._completed
        if record.errors:
            LOGGER.warning(
                "<Runner> N=%s trial=%s: %s", n, trial, " | ".join(record.errors)
            )
        LOGGER.info(
            "<Runner> N=%s trial=%s done in %.2fs (%s/%s)",
            n,
            trial,
            record.wall_time,
            completed,
            self.plan.total_trials,
        )

    async def async_run(self) -> list[RunRecord]:
        """Run the plan, records are returned ordered by (N, trial)."""
        await ValidationManager().async_run_graphon_checks(self.graphon, strict=True)
        context = await asyncio.to_thread(self.build_context)
        self._lock = asyncio.Lock()
        self.records = []
        self._completed = 0
        for n in self.plan.n_grid:
            for trial in range(self.plan.trials_per_n):
                self.queue.add((n, trial), self._run_trial(context, n, trial))
        LOGGER.info(
            "<Runner> %s: %s trials over N=%s",
            self.graphon.label,
            self.plan.total_trials,
            list(self.plan.n_grid),
        )
        await self.queue.execute()
        return sorted_records(self.records)

    def run(self) -> list[RunRecord]:
        """Blocking wrapper around async_run."""
        return asyncio.run(self.async_run())


def run_plan(
    plan: ExperimentPlan,
    graphon: Graphon | None = None,
    configuration: LabConfiguration | None = None,
) -> list[RunRecord]:
    """Run a plan to completion."""
    return ExperimentRunner(plan, graphon, configuration).run()


def write_outputs(records: list[RunRecord], plan: ExperimentPlan, out_dir: str | Path) -> list[Path]:
    """Write records.csv, timings.csv and coverage.csv."""
    out_dir = Path(out_dir)
    paths = [
        write_records(records, out_dir / "records.csv", plan.master_seed),
        write_timings(records, out_dir / "timings.csv", plan.master_seed),
    ]
    if Metric.BOUNDS in plan.metrics:
        paths.append(write_coverage(records, out_dir / "coverage.csv", plan.master_seed))
    return paths
