"""Common test helpers."""

from __future__ import annotations

from itertools import permutations
from pathlib import Path

import numpy as np

from graphon_lab.sampler import SimpleGraph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(filename: str) -> Path:
    """Return the path of a fixture file."""
    return FIXTURES / filename


def random_simple_graph(rng: np.random.Generator, n: int, p: float) -> SimpleGraph:
    """Erdos-Renyi graph."""
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return SimpleGraph(adjacency=(upper | upper.T).astype(float))


def complete_graph(n: int) -> SimpleGraph:
    """K_n."""
    return SimpleGraph(adjacency=np.ones((n, n)) - np.eye(n))


def path_graph(n: int) -> SimpleGraph:
    """P_n."""
    adjacency = np.zeros((n, n))
    index = np.arange(n - 1)
    adjacency[index, index + 1] = adjacency[index + 1, index] = 1.0
    return SimpleGraph(adjacency=adjacency)


def brute_force_assignment(cost: np.ndarray) -> float:
    """Minimum of sum cost[i, pi(i)] over all permutations."""
    n = cost.shape[0]
    candidates = np.array(list(permutations(range(n))))
    return float(cost[np.arange(n), candidates].sum(axis=1).min())
