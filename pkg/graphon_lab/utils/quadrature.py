"""Composite Gauss-Legendre quadrature on [0, 1]."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from functools import lru_cache

import numpy as np

from ..const import STEP_QUADRATURE_ORDER


@lru_cache(maxsize=16)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Return read-only Gauss-Legendre nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def subdivide(edges: Sequence[float] | np.ndarray, subdivisions: int) -> np.ndarray:
    """Split every panel into equal sub-panels."""
    edges = np.asarray(edges, dtype=float)
    if subdivisions <= 1:
        return edges
    parts = [np.linspace(a, b, subdivisions + 1)[:-1] for a, b in zip(edges[:-1], edges[1:])]
    return np.concatenate([*parts, edges[-1:]])


def panel_rule(
    edges: Sequence[float] | np.ndarray, order: int
) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights per panel, both shaped (panels, order)."""
    edges = np.asarray(edges, dtype=float)
    reference_nodes, reference_weights = gauss_legendre(order)
    left = edges[:-1, None]
    width = np.diff(edges)[:, None]
    nodes = left + width * (reference_nodes + 1.0) / 2.0
    weights = width / 2.0 * reference_weights
    return nodes, weights


def composite_rule(
    edges: Sequence[float] | np.ndarray, order: int, subdivisions: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """Flattened composite rule over the panels given by edges."""
    nodes, weights = panel_rule(subdivide(edges, subdivisions), order)
    return nodes.ravel(), weights.ravel()


def integrate(
    function: Callable[[np.ndarray], np.ndarray],
    edges: Sequence[float] | np.ndarray,
    order: int,
    subdivisions: int = 1,
) -> float:
    """Integrate a vectorized function over the panels given by edges."""
    nodes, weights = composite_rule(edges, order, subdivisions)
    return float(np.dot(function(nodes), weights))


def partition_rule(
    n: int,
    breakpoints: Sequence[float] = (0.0, 1.0),
    order: int = STEP_QUADRATURE_ORDER,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rule on the uniform partition B_i = ((i-1)/n, i/n], split at breakpoints.

    Returns nodes and weights shaped (panels, order) and, per panel, the
    zero-based index of the interval B_i that owns it.
    """
    edges = np.union1d(np.arange(n + 1) / n, np.asarray(breakpoints, dtype=float))
    nodes, weights = panel_rule(edges, order)
    middle = (edges[:-1] + edges[1:]) / 2.0
    owner = np.minimum(np.floor(middle * n).astype(int), n - 1)
    return nodes, weights, owner
