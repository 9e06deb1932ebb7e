"""graphon_lab command line interface.

python -m scripts.lab.cli <command> [options]
"""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from pathlib import Path
import sys

from graphon_lab.bounds import BoundInputs, evaluate_realization
from graphon_lab.const import (
    DEFAULT_MASTER_SEED,
    GRAPHON_PRESETS,
    NYSTROM_DEFAULT_RESOLUTION,
    SEPARATION_TOL,
)
from graphon_lab.core import graphon_laplacian_spectrum, operator_norm
from graphon_lab.enums import ExitCode, SamplingMode
from graphon_lab.exceptions import (
    GraphonManifestException,
    GraphonValidationException,
    InsufficientDataException,
    NumericalContractException,
)
from graphon_lab.graphons import Graphon, graphon_from_manifest, load_graphon
from graphon_lab.lab.figures import emit_figures
from graphon_lab.lab.plan import load_plan
from graphon_lab.lab.runner import ExperimentRunner, write_outputs
from graphon_lab.lab.slopes import fit_slope, write_slopes
from graphon_lab.resistance import resistance_report
from graphon_lab.sampler import (
    export_dense,
    export_simple_graph,
    export_weighted_graph,
    import_simple_graph,
    sample_realization,
)
from graphon_lab.spectral import export_step_function, step_functions, summarize
from graphon_lab.utils.csv_io import read_rows, write_rows
from graphon_lab.utils.logger import LOGGER
from graphon_lab.validate.manager import run_graphon_checks

from .common import print_error_and_exit, setup_logging

SLOPE_METRICS = (
    "prop1_lhs",
    "prop2_lhs",
    "thm1_lhs",
    "mu2_diff",
    "r_abs_error",
    "r_rel_error",
)


class UsageError(Exception):
    """Raised instead of argparse's own exit."""


class ArgumentParser(argparse.ArgumentParser):
    """Parser that reports usage errors with exit code 1."""

    def error(self, message: str) -> None:
        raise UsageError(message)


def _add_graphon_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--manifest", type=Path, help="graphon manifest (JSON)")
    source.add_argument("--preset", choices=sorted(GRAPHON_PRESETS), help="built-in graphon")


def _add_sampling_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of nodes")
    parser.add_argument("--seed", type=int, default=DEFAULT_MASTER_SEED, help="master seed")
    parser.add_argument("--trial", type=int, default=0, help="trial index")
    parser.add_argument(
        "--deterministic", action="store_true", help="use latents i/N instead of uniform draws"
    )


def _graphon(args: argparse.Namespace) -> Graphon:
    graphon = (
        graphon_from_manifest(GRAPHON_PRESETS[args.preset])
        if args.preset
        else load_graphon(args.manifest)
    )
    run_graphon_checks(graphon, strict=True)
    return graphon


def _mode(args: argparse.Namespace) -> SamplingMode:
    return SamplingMode.DETERMINISTIC if args.deterministic else SamplingMode.RANDOM


def command_sample(args: argparse.Namespace) -> None:
    graphon = _graphon(args)
    realization = sample_realization(graphon, args.n, args.seed, args.trial, _mode(args))
    export_simple_graph(realization.simple, args.out, args.seed)
    if args.weighted_out:
        export_weighted_graph(realization.weighted, args.weighted_out, args.seed)
    if args.dense_out:
        export_dense(realization.simple, args.dense_out, args.seed)
    print(f"n={realization.simple.n} edges={realization.simple.edge_count}")


def command_spectrum(args: argparse.Namespace) -> None:
    summary = summarize(import_simple_graph(args.graph))
    seed = read_rows(args.graph)[0].get("master_seed")
    master_seed = None if seed is None else int(seed)
    write_rows(
        args.out,
        ("i", "lambda", "mu", "degree", "degree_sorted"),
        zip(
            range(1, summary.n + 1),
            summary.lambdas,
            summary.mus,
            summary.degrees,
            summary.degrees_sorted,
        ),
        master_seed,
    )
    if args.steps:
        export_step_function(step_functions(summary)[0], args.steps, master_seed)
    print(f"n={summary.n} mu_2={summary.spectral_gap!r}")


def command_bounds(args: argparse.Namespace) -> None:
    graphon = _graphon(args)
    mode = _mode(args)
    nu = graphon.resolve_nu(args.nu)
    realization = sample_realization(graphon, args.n, args.seed, args.trial, mode)
    inputs = BoundInputs.from_graphon(
        graphon, args.n, nu, mode, operator_norm(graphon).operator_norm
    )
    report = evaluate_realization(graphon, realization.weighted, realization.simple, inputs)
    row = report.as_row()
    if args.out:
        write_rows(args.out, list(row), [list(row.values())], args.seed, n=args.n, nu=nu)
    for name, flag in report.large_enough.as_dict().items():
        print(f"{name}={'true' if flag else 'false'}")
    for result, bound in report.bounds.items():
        print(f"{result}: lhs={report.lhs.get(result)!r} bound={bound!r} holds={report.holds.get(result)}")


def command_resistance(args: argparse.Namespace) -> None:
    graphon = _graphon(args)
    realization = sample_realization(graphon, args.n, args.seed, args.trial, _mode(args))
    report = resistance_report(graphon, realization.simple)
    values = {
        "n": report.n,
        "r_ave_spectral": report.r_ave_spectral,
        "r_ave_pseudoinverse": report.r_ave_pseudoinverse,
        "r_ave_graphon": report.r_ave_graphon,
        "abs_error": report.abs_error,
        "rel_error": report.rel_error,
    }
    if args.out:
        write_rows(args.out, list(values), [list(values.values())], args.seed)
    for name, value in values.items():
        print(f"{name}={value!r}")


def command_experiment(args: argparse.Namespace) -> None:
    plan = load_plan(args.plan)
    runner = ExperimentRunner(plan)
    records = runner.run()
    write_outputs(records, plan, args.out)

    fits = []
    for metric in SLOPE_METRICS:
        try:
            fits.append(fit_slope(records, metric))
        except InsufficientDataException as exception:
            LOGGER.debug("<Slopes> %s", exception)
    write_slopes(fits, args.out / "slopes.csv", plan.master_seed)
    for fit in fits:
        print(f"{fit.metric}: slope={fit.slope:.4f} r2={fit.r_squared:.4f}")

    limits = [record.values["limit_mu2"] for record in records if "limit_mu2" in record.values]
    emit_figures(
        records,
        args.out / "figures",
        graphon=runner.graphon,
        master_seed=plan.master_seed,
        limit_mu2=limits[0] if limits else None,
    )


def command_graphon_spec(args: argparse.Namespace) -> None:
    graphon = _graphon(args)
    extrema = graphon.extrema
    norm = operator_norm(graphon)
    spectrum = graphon_laplacian_spectrum(graphon, args.resolution, args.separation_tol)
    print(f"family={graphon.family} L={graphon.lipschitz_L!r} K={graphon.K}")
    print(f"eta_W in [{extrema.eta_low!r}, {extrema.eta_high!r}]")
    print(f"delta_W in [{extrema.delta_low!r}, {extrema.delta_high!r}]")
    print(f"operator_norm={norm.operator_norm!r} resolution={norm.resolution} converged={norm.converged}")
    print(f"essential_range={spectrum.essential_range}")
    print(f"isolated_below={spectrum.isolated_below}")
    print(f"isolated_above={spectrum.isolated_above}")
    print(f"limit_mu2={spectrum.limit_mu2!r}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="graphon_lab", description=__doc__)
    parser.add_argument("--debug", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    sample = commands.add_parser("sample", help="sample a graph from a graphon")
    _add_graphon_arguments(sample)
    _add_sampling_arguments(sample)
    sample.add_argument("--out", type=Path, required=True, help="simple graph edge list")
    sample.add_argument("--weighted-out", type=Path, help="weighted graph edge list")
    sample.add_argument("--dense-out", type=Path, help="dense adjacency matrix")
    sample.set_defaults(handler=command_sample)

    spectrum = commands.add_parser("spectrum", help="Laplacian spectrum of a graph")
    spectrum.add_argument("--graph", type=Path, required=True, help="edge list from 'sample'")
    spectrum.add_argument("--out", type=Path, required=True, help="spectrum CSV")
    spectrum.add_argument("--steps", type=Path, help="step function CSV of mu_N")
    spectrum.set_defaults(handler=command_spectrum)

    bounds = commands.add_parser("bounds", help="bounds on one realization")
    _add_graphon_arguments(bounds)
    _add_sampling_arguments(bounds)
    bounds.add_argument(
        "--nu", type=float, help="failure probability (default: the manifest nu, else 0.1)"
    )
    bounds.add_argument("--out", type=Path, help="bound report CSV")
    bounds.set_defaults(handler=command_bounds)

    resistance = commands.add_parser("resistance", help="average effective resistance")
    _add_graphon_arguments(resistance)
    _add_sampling_arguments(resistance)
    resistance.add_argument("--out", type=Path, help="resistance report CSV")
    resistance.set_defaults(handler=command_resistance)

    experiment = commands.add_parser("experiment", help="run an experiment plan")
    experiment.add_argument("--plan", type=Path, required=True, help="experiment plan (JSON)")
    experiment.add_argument("--out", type=Path, required=True, help="output directory")
    experiment.set_defaults(handler=command_experiment)

    graphon_spec = commands.add_parser("graphon-spec", help="spectral data of a graphon")
    _add_graphon_arguments(graphon_spec)
    graphon_spec.add_argument("--resolution", type=int, default=NYSTROM_DEFAULT_RESOLUTION)
    graphon_spec.add_argument("--separation-tol", type=float, default=SEPARATION_TOL)
    graphon_spec.set_defaults(handler=command_graphon_spec)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exception:
        parser.print_usage(sys.stderr)
        print_error_and_exit(str(exception), ExitCode.USAGE)

    setup_logging(args.debug)
    try:
        args.handler(args)
    except GraphonManifestException as exception:
        print_error_and_exit(str(exception), ExitCode.USAGE)
    except (GraphonValidationException, NumericalContractException) as exception:
        print_error_and_exit(str(exception), ExitCode.NUMERICAL)
    return ExitCode.SUCCESS


if __name__ == "__main__":
    sys.exit(main())
