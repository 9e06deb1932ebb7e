"""Sampling weighted and simple graphs from a graphon."""

from __future__ import annotations

from pathlib import Path

import attr
import numpy as np

from .const import SYMMETRY_TOL
from .enums import SamplingMode, StageTag
from .exceptions import GraphonManifestException, NumericalContractException
from .graphons.base import Graphon
from .utils.csv_io import read_rows, write_matrix, write_rows
from .utils.logger import LOGGER
from .utils.seed import SeedRecord, as_generator

Seed = int | SeedRecord | np.random.Generator


def _as_array(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


def _check_adjacency(adjacency: np.ndarray) -> None:
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
        raise NumericalContractException("Adjacency matrix is not square")
    if adjacency.shape[0] < 2:
        raise NumericalContractException("Graphs need at least 2 nodes")
    if np.max(np.abs(adjacency - adjacency.T)) > SYMMETRY_TOL:
        raise NumericalContractException("Adjacency matrix is not symmetric")


@attr.s(auto_attribs=True, frozen=True, eq=False)
class WeightedGraph:
    """Complete weighted graph with entries W(X_(i), X_(j)), self-loops included."""

    latents: np.ndarray = attr.ib(converter=_as_array)
    adjacency: np.ndarray = attr.ib(converter=_as_array)
    mode: SamplingMode = SamplingMode.RANDOM

    def __attrs_post_init__(self) -> None:
        _check_adjacency(self.adjacency)
        if self.latents.shape != (self.n,):
            raise NumericalContractException("One latent position per node is required")
        if np.any(np.diff(self.latents) < 0):
            raise NumericalContractException("Latent positions are not sorted")
        if self.adjacency.min() < 0.0 or self.adjacency.max() > 1.0:
            raise NumericalContractException("Edge weights are not in [0, 1]")

    @property
    def n(self) -> int:
        """Number of nodes."""
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        """Weighted degrees, diagonal included."""
        return self.adjacency.sum(axis=1)


@attr.s(auto_attribs=True, frozen=True, eq=False)
class SimpleGraph:
    """Undirected graph without self-loops, node i keeps latent order."""

    adjacency: np.ndarray = attr.ib(converter=_as_array)
    parent_seed: SeedRecord | int | None = None

    def __attrs_post_init__(self) -> None:
        _check_adjacency(self.adjacency)
        if not np.all((self.adjacency == 0.0) | (self.adjacency == 1.0)):
            raise NumericalContractException("Adjacency matrix is not binary")
        if np.any(np.diag(self.adjacency) != 0.0):
            raise NumericalContractException("Simple graphs have no self-loops")

    @property
    def n(self) -> int:
        """Number of nodes."""
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        """Node degrees."""
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return int(self.adjacency.sum()) // 2

    @property
    def edge_density(self) -> float:
        """Fraction of the n(n-1)/2 possible edges present."""
        return self.edge_count / (self.n * (self.n - 1) / 2)


@attr.s(auto_attribs=True, frozen=True, eq=False)
class Realization:
    """One sampled pair (weighted graph, simple graph)."""

    weighted: WeightedGraph
    simple: SimpleGraph
    latent_seed: SeedRecord | None
    thinning_seed: SeedRecord


def sample_latents(n: int, seed: Seed) -> np.ndarray:
    """N iid Uniform[0, 1] positions, sorted ascending."""
    if n < 2:
        raise NumericalContractException(f"N={n} must be at least 2")
    return np.sort(as_generator(seed).random(n))


def deterministic_latents(n: int) -> np.ndarray:
    """Positions i/N, i = 1..N."""
    if n < 2:
        raise NumericalContractException(f"N={n} must be at least 2")
    return np.arange(1, n + 1) / n


def weighted_graph(
    graphon: Graphon, latents: np.ndarray, mode: SamplingMode = SamplingMode.RANDOM
) -> WeightedGraph:
    """Weighted graph on sorted latents."""
    latents = np.asarray(latents, dtype=float)
    if np.any(np.diff(latents) < 0):
        raise NumericalContractException("Latent positions are not sorted")
    if latents.min() < 0.0 or latents.max() > 1.0:
        raise NumericalContractException("Latent positions are not in [0, 1]")
    values = graphon.kernel(latents[:, None], latents[None, :])
    # Upper triangle is evaluated, lower triangle mirrors it.
    adjacency = np.triu(values) + np.triu(values, 1).T
    return WeightedGraph(latents=latents, adjacency=adjacency, mode=mode)


def deterministic_weighted_graph(graphon: Graphon, n: int) -> WeightedGraph:
    """Weighted graph on the deterministic latents i/N."""
    return weighted_graph(graphon, deterministic_latents(n), SamplingMode.DETERMINISTIC)


def bernoulli_thin(weighted: WeightedGraph, seed: Seed) -> SimpleGraph:
    """Keep edge i < j independently with probability adjacency[i, j]."""
    draws = as_generator(seed).random((weighted.n, weighted.n))
    upper = np.triu(draws < weighted.adjacency, k=1)
    adjacency = (upper | upper.T).astype(float)
    return SimpleGraph(
        adjacency=adjacency, parent_seed=seed if isinstance(seed, SeedRecord | int) else None
    )


def sample_realization(
    graphon: Graphon,
    n: int,
    master_seed: int,
    trial: int,
    mode: SamplingMode = SamplingMode.RANDOM,
) -> Realization:
    """Sample the pair for (N, trial) with seeds derived from the master seed."""
    thinning_seed = SeedRecord(master_seed, n, trial, StageTag.THINNING)
    if mode == SamplingMode.DETERMINISTIC:
        latent_seed = None
        weighted = deterministic_weighted_graph(graphon, n)
    else:
        latent_seed = SeedRecord(master_seed, n, trial, StageTag.LATENTS)
        weighted = weighted_graph(graphon, sample_latents(n, latent_seed), mode)
    simple = bernoulli_thin(weighted, thinning_seed)
    LOGGER.debug(
        "<Sampler> N=%s trial=%s mode=%s edges=%s", n, trial, mode, simple.edge_count
    )
    return Realization(
        weighted=weighted, simple=simple, latent_seed=latent_seed, thinning_seed=thinning_seed
    )


def export_simple_graph(graph: SimpleGraph, path: str | Path, master_seed: int | None = None) -> Path:
    """Write the edge list (i < j, zero based)."""
    rows, columns = np.nonzero(np.triu(graph.adjacency, k=1))
    return write_rows(path, ("i", "j"), zip(rows, columns), master_seed, n=graph.n)


def export_weighted_graph(
    graph: WeightedGraph, path: str | Path, master_seed: int | None = None
) -> Path:
    """Write latents and the weighted edge list (i <= j)."""
    rows, columns = np.triu_indices(graph.n)
    return write_rows(
        path,
        ("i", "j", "x_i", "x_j", "weight"),
        zip(
            rows,
            columns,
            graph.latents[rows],
            graph.latents[columns],
            graph.adjacency[rows, columns],
        ),
        master_seed,
        n=graph.n,
        mode=graph.mode,
    )


def export_dense(graph: WeightedGraph | SimpleGraph, path: str | Path, master_seed: int | None = None) -> Path:
    """Write the dense adjacency matrix."""
    return write_matrix(path, graph.adjacency, master_seed)


def import_simple_graph(path: str | Path) -> SimpleGraph:
    """Read an edge list written by export_simple_graph."""
    comment, header, rows = read_rows(path)
    if header[:2] != ["i", "j"] or "n" not in comment:
        raise GraphonManifestException(f"{path} is not a graphon_lab edge list")
    n = int(comment["n"])
    adjacency = np.zeros((n, n))
    for row in rows:
        i, j = int(row[0]), int(row[1])
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise GraphonManifestException(f"{path} holds an invalid edge ({i}, {j})")
        adjacency[i, j] = adjacency[j, i] = 1.0
    return SimpleGraph(adjacency=adjacency)
