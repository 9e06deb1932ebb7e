"""Per-trial metric computation."""

from __future__ import annotations

from collections.abc import Callable
from functools import cached_property
import time
from typing import Any

import attr

from ..base import LabConfiguration
from ..bounds import BoundInputs, evaluate_realization
from ..core import nondecreasing_rearrangement
from ..enums import Metric
from ..exceptions import NumericalContractException
from ..graphons.base import Graphon
from ..resistance import resistance_report
from ..sampler import Realization, sample_realization
from ..spectral import (
    SpectrumSummary,
    optimal_permutation_distance,
    spectral_gap_pair,
    step_functions,
    step_l2_distance,
    step_to_function_l2,
    summarize,
)
from .plan import ExperimentPlan
from .records import RunRecord


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class TrialContext:
    """Shared, read-only inputs of every trial of a plan."""

    graphon: Graphon
    plan: ExperimentPlan
    configuration: LabConfiguration
    nu: float
    operator_norm: float | None = None
    limit_mu2: float | None = None

    @cached_property
    def rearrangement(self) -> tuple[Callable, tuple[float, ...]]:
        """Nondecreasing rearrangement of the degree and its kink points."""
        function, kinks, _ = nondecreasing_rearrangement(self.graphon)
        return function, kinks


class _Spectra:
    """Spectra of one realization, computed on first use."""

    def __init__(self, realization: Realization) -> None:
        self.realization = realization

    @cached_property
    def simple(self) -> SpectrumSummary:
        return summarize(self.realization.simple)

    @cached_property
    def weighted(self) -> SpectrumSummary:
        return summarize(self.realization.weighted)


def _prop1(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    mu_step, _, sorted_degree_step = step_functions(spectra.simple)
    values["prop1_lhs"] = step_l2_distance(mu_step, sorted_degree_step)


def _prop2(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    values["prop2_lhs"] = optimal_permutation_distance(
        spectra.simple.mus, context.graphon, context.configuration.step_quadrature_order
    ).distance


def _thm1(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    mu_step, _, _ = step_functions(spectra.simple)
    function, kinks = context.rearrangement
    values["thm1_lhs"] = step_to_function_l2(
        mu_step, function, kinks, context.configuration.step_quadrature_order
    )


def _mu2_pair(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    pair = spectral_gap_pair(
        context.graphon,
        spectra.realization.weighted,
        spectra.realization.simple,
        weighted_summary=spectra.weighted,
        simple_summary=spectra.simple,
    )
    values.update(
        mu2=pair.mu2,
        mu2_bar=pair.mu2_bar,
        mu2_diff=pair.difference,
        eta_W=pair.eta_W,
        prop3_holds=pair.prop3_holds,
        limit_mu2=context.limit_mu2,
    )


def _resistance(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    report = resistance_report(context.graphon, spectra.realization.simple, spectra.simple)
    values.update(
        r_spectral=report.r_ave_spectral,
        r_pinv=report.r_ave_pseudoinverse,
        r_graphon=report.r_ave_graphon,
        r_abs_error=report.abs_error,
        r_rel_error=report.rel_error,
    )


def _bounds(context: TrialContext, spectra: _Spectra, values: dict[str, Any]) -> None:
    if context.operator_norm is None:
        raise NumericalContractException("Bounds need the operator norm of the graphon")
    realization = spectra.realization
    inputs = BoundInputs.from_graphon(
        context.graphon,
        realization.simple.n,
        context.nu,
        context.plan.sampling_mode,
        context.operator_norm,
    )
    report = evaluate_realization(
        context.graphon,
        realization.weighted,
        realization.simple,
        inputs,
        weighted_summary=spectra.weighted,
        simple_summary=spectra.simple,
        operator_refinement=context.configuration.operator_deviation_refinement,
        step_order=context.configuration.step_quadrature_order,
        degree_order=context.configuration.degree_quadrature_order,
    )
    values.update(report.as_row())
    values.update(
        {
            f"{result}_coverage_target": target
            for result, target in report.coverage.items()
            if result in report.bounds
        }
    )


METRIC_HANDLERS: dict[Metric, Callable[[TrialContext, _Spectra, dict[str, Any]], None]] = {
    Metric.BOUNDS: _bounds,
    Metric.MU2_PAIR: _mu2_pair,
    Metric.PROP1: _prop1,
    Metric.PROP2: _prop2,
    Metric.RESISTANCE: _resistance,
    Metric.THM1: _thm1,
}


def run_trial(context: TrialContext, n: int, trial: int) -> RunRecord:
    """Sample one realization and compute the plan's metrics on it.

    Numerical failures of one metric are recorded on the row and the other
    metrics still run.
    """
    start = time.perf_counter()
    record = RunRecord(n=n, trial=trial)
    plan = context.plan
    try:
        realization = sample_realization(
            context.graphon, n, plan.master_seed, trial, plan.sampling_mode
        )
    except NumericalContractException as exception:
        record.errors.append(f"sample: {exception}")
        record.wall_time = time.perf_counter() - start
        return record

    record.latent_seed = realization.latent_seed.seed if realization.latent_seed else None
    record.thinning_seed = realization.thinning_seed.seed
    record.values["edge_density"] = realization.simple.edge_density

    spectra = _Spectra(realization)
    for metric in sorted(plan.metrics):
        try:
            METRIC_HANDLERS[metric](context, spectra, record.values)
        except NumericalContractException as exception:
            record.errors.append(f"{metric}: {exception}")

    record.wall_time = time.perf_counter() - start
    return record
