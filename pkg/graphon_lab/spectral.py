"""Laplacian spectra, step functions and their L2 distances."""

from __future__ import annotations

from collections.abc import Callable, Sequence
import math
from pathlib import Path
from typing import TYPE_CHECKING

import attr
import numpy as np
from scipy import linalg, optimize

from .const import CLAMP_TOL, STEP_QUADRATURE_ORDER, SYMMETRY_TOL
from .core import degree_function
from .exceptions import NumericalContractException
from .sampler import SimpleGraph, WeightedGraph
from .utils.csv_io import write_rows
from .utils.logger import LOGGER
from .utils.quadrature import partition_rule

if TYPE_CHECKING:
    from .graphons.base import Graphon

GraphLike = WeightedGraph | SimpleGraph | np.ndarray


def _as_array(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


@attr.s(auto_attribs=True, frozen=True, eq=False)
class StepFunction:
    """Function equal to values[i] on B_i = ((i-1)/n, i/n]."""

    values: np.ndarray = attr.ib(converter=_as_array)

    @property
    def n(self) -> int:
        """Number of steps."""
        return self.values.shape[0]

    @property
    def l2_norm(self) -> float:
        """L2 norm on [0, 1]."""
        return float(np.sqrt(np.mean(self.values**2)))

    def __call__(self, x: np.ndarray) -> np.ndarray:
        index = np.clip(np.ceil(np.asarray(x, dtype=float) * self.n).astype(int) - 1, 0, self.n - 1)
        return self.values[index]


@attr.s(auto_attribs=True, frozen=True, eq=False)
class SpectrumSummary:
    """Laplacian eigenvalues, ascending, with the degrees of the same graph."""

    lambdas: np.ndarray = attr.ib(converter=_as_array)
    degrees: np.ndarray = attr.ib(converter=_as_array)

    @property
    def n(self) -> int:
        """Number of nodes."""
        return self.lambdas.shape[0]

    @property
    def mus(self) -> np.ndarray:
        """Normalized eigenvalues lambda / N."""
        return self.lambdas / self.n

    @property
    def degrees_sorted(self) -> np.ndarray:
        """Degrees, ascending."""
        return np.sort(self.degrees)

    @property
    def deltas(self) -> np.ndarray:
        """Normalized degrees in node order."""
        return self.degrees / self.n

    @property
    def deltas_sorted(self) -> np.ndarray:
        """Normalized degrees, ascending."""
        return self.degrees_sorted / self.n

    @property
    def spectral_gap(self) -> float:
        """Normalized algebraic connectivity mu_2."""
        return float(self.mus[1])


@attr.s(auto_attribs=True, frozen=True)
class StepGraphonNorms:
    """Norms of the step graphon W_G of an adjacency matrix."""

    frobenius: float
    l2_step: float
    l2_step_direct: float
    operator_norm_step: float


@attr.s(auto_attribs=True, frozen=True)
class PermutationMatch:
    """Result of matching eigenvalues to intervals."""

    distance: float
    permutation: tuple[int, ...]


@attr.s(auto_attribs=True, frozen=True)
class SpectralGapPair:
    """mu_2 of the simple and of the weighted graph."""

    mu2: float
    mu2_bar: float
    eta_W: float
    prop3_holds: bool

    @property
    def difference(self) -> float:
        """|mu_2 - mu_2 bar|."""
        return abs(self.mu2 - self.mu2_bar)


def _adjacency(graph: GraphLike) -> np.ndarray:
    if isinstance(graph, WeightedGraph | SimpleGraph):
        return graph.adjacency
    adjacency = np.asarray(graph, dtype=float)
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
        raise NumericalContractException("Adjacency matrix is not square")
    return adjacency


def laplacian(graph: GraphLike) -> np.ndarray:
    """L = D - A, D the row sums of A (diagonal included)."""
    adjacency = _adjacency(graph)
    return np.diag(adjacency.sum(axis=1)) - adjacency


def spectrum(laplacian_matrix: np.ndarray, degrees: np.ndarray | None = None) -> SpectrumSummary:
    """Eigenvalues of a symmetric Laplacian, ascending.

    Without explicit degrees the diagonal of L is used, which is exact for
    graphs without self-loops.
    """
    matrix = np.asarray(laplacian_matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NumericalContractException("Laplacian is not square")
    if np.max(np.abs(matrix - matrix.T)) > SYMMETRY_TOL:
        raise NumericalContractException("Laplacian is not symmetric")

    eigenvalues = linalg.eigh(matrix, eigvals_only=True)
    eigenvalues[(eigenvalues < 0.0) & (eigenvalues > -CLAMP_TOL)] = 0.0
    if eigenvalues[0] < 0.0:
        LOGGER.warning("<Spectrum> Negative eigenvalue %.3e kept", eigenvalues[0])
    return SpectrumSummary(
        lambdas=eigenvalues,
        degrees=np.diag(matrix) if degrees is None else degrees,
    )


def summarize(graph: GraphLike) -> SpectrumSummary:
    """Spectrum of a graph, degrees counted with self-loops."""
    adjacency = _adjacency(graph)
    return spectrum(laplacian(adjacency), adjacency.sum(axis=1))


def step_functions(summary: SpectrumSummary) -> tuple[StepFunction, StepFunction, StepFunction]:
    """(mu_N, d_N, tilde d_N): eigenvalues, degrees in node order, sorted degrees."""
    return (
        StepFunction(summary.mus),
        StepFunction(summary.deltas),
        StepFunction(summary.deltas_sorted),
    )


def export_step_function(
    step: StepFunction, path: str | Path, master_seed: int | None = None
) -> Path:
    """Write (i, left_endpoint, value) rows, i one based."""
    index = np.arange(1, step.n + 1)
    return write_rows(
        path,
        ("i", "left_endpoint", "value"),
        zip(index, (index - 1) / step.n, step.values),
        master_seed,
    )


def step_l2_distance(first: StepFunction, second: StepFunction) -> float:
    """L2 distance of two step functions on the same partition."""
    if first.n != second.n:
        raise NumericalContractException(f"Step sizes differ: {first.n} != {second.n}")
    return float(np.sqrt(np.mean((first.values - second.values) ** 2)))


def step_to_function_l2(
    step: StepFunction,
    function: Callable[[np.ndarray], np.ndarray],
    breakpoints: Sequence[float] = (0.0, 1.0),
    order: int = STEP_QUADRATURE_ORDER,
) -> float:
    """L2 distance of a step function and a function, exact on each smooth piece."""
    nodes, weights, owner = partition_rule(step.n, breakpoints, order)
    residual = step.values[owner][:, None] - function(nodes)
    return math.sqrt(max(float(np.sum(weights * residual**2)), 0.0))


def interval_moments(
    function: Callable[[np.ndarray], np.ndarray],
    n: int,
    breakpoints: Sequence[float] = (0.0, 1.0),
    order: int = STEP_QUADRATURE_ORDER,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrals of f and f^2 over every B_i."""
    nodes, weights, owner = partition_rule(n, breakpoints, order)
    values = function(nodes)
    first = np.bincount(owner, weights=np.sum(weights * values, axis=1), minlength=n)
    second = np.bincount(owner, weights=np.sum(weights * values**2, axis=1), minlength=n)
    return first, second


def permutation_cost_matrix(
    mus: np.ndarray, graphon: Graphon, order: int = STEP_QUADRATURE_ORDER
) -> np.ndarray:
    """cost[i, j] = integral over B_i of (mu_j - d)^2."""
    mus = np.asarray(mus, dtype=float)
    first, second = interval_moments(degree_function(graphon), mus.shape[0], graphon.breakpoints, order)
    return mus[None, :] ** 2 / mus.shape[0] - 2.0 * first[:, None] * mus[None, :] + second[:, None]


def optimal_permutation_distance(
    mus: np.ndarray, graphon: Graphon, order: int = STEP_QUADRATURE_ORDER
) -> PermutationMatch:
    """Minimum over permutations pi of || sum mu_pi(i) 1_B_i - d ||_2.

    Only the cross term depends on pi, so pairing ascending eigenvalues with
    intervals of ascending degree mass is optimal.
    """
    mus = np.asarray(mus, dtype=float)
    n = mus.shape[0]
    first, _ = interval_moments(degree_function(graphon), n, graphon.breakpoints, order)
    permutation = np.empty(n, dtype=int)
    permutation[np.argsort(first, kind="stable")] = np.argsort(mus, kind="stable")
    distance = step_to_function_l2(
        StepFunction(mus[permutation]), degree_function(graphon), graphon.breakpoints, order
    )
    return PermutationMatch(distance=distance, permutation=tuple(permutation.tolist()))


def assignment_permutation_distance(
    mus: np.ndarray, graphon: Graphon, order: int = STEP_QUADRATURE_ORDER
) -> PermutationMatch:
    """Same minimum through a general linear assignment solver."""
    cost = permutation_cost_matrix(mus, graphon, order)
    rows, columns = optimize.linear_sum_assignment(cost)
    permutation = np.empty(cost.shape[0], dtype=int)
    permutation[rows] = columns
    distance = step_to_function_l2(
        StepFunction(np.asarray(mus, dtype=float)[permutation]),
        degree_function(graphon),
        graphon.breakpoints,
        order,
    )
    return PermutationMatch(distance=distance, permutation=tuple(permutation.tolist()))


def step_graphon_norms(graph: GraphLike, refinement: int = 2) -> StepGraphonNorms:
    """||A||_F, ||W_G||_2 (closed form and sampled) and |||T_{W_G}|||."""
    adjacency = _adjacency(graph)
    n = adjacency.shape[0]
    frobenius = float(np.linalg.norm(adjacency, "fro"))
    owner = np.arange(n * refinement) // refinement
    sampled = adjacency[np.ix_(owner, owner)]
    eigenvalues = linalg.eigh(adjacency, eigvals_only=True)
    return StepGraphonNorms(
        frobenius=frobenius,
        l2_step=frobenius / n,
        l2_step_direct=float(np.sqrt(np.mean(sampled**2))),
        operator_norm_step=float(np.max(np.abs(eigenvalues)) / n),
    )


def spectral_gap_pair(
    graphon: Graphon,
    weighted: WeightedGraph,
    simple: SimpleGraph,
    *,
    weighted_summary: SpectrumSummary | None = None,
    simple_summary: SpectrumSummary | None = None,
) -> SpectralGapPair:
    """mu_2 and mu_2 bar of one realization, with the check mu_2 bar >= eta_W."""
    if weighted.n != simple.n:
        raise NumericalContractException("Weighted and simple graphs differ in size")
    mu2_bar = (weighted_summary or summarize(weighted)).spectral_gap
    mu2 = (simple_summary or summarize(simple)).spectral_gap
    eta = graphon.eta_W
    return SpectralGapPair(
        mu2=mu2, mu2_bar=mu2_bar, eta_W=eta, prop3_holds=mu2_bar >= eta - CLAMP_TOL
    )
