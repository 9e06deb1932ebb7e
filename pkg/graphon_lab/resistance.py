"""Average effective resistance of graphs and its graphon limit."""

from __future__ import annotations

from typing import TYPE_CHECKING

import attr
import numpy as np
from scipy import linalg

from .const import (
    CONNECTIVITY_TOL,
    DEGREE_QUADRATURE_ORDER,
    RESISTANCE_QUADRATURE_SUBDIVISIONS,
)
from .core import degree
from .exceptions import DisconnectedGraphException, NumericalContractException
from .sampler import SimpleGraph, WeightedGraph
from .spectral import SpectrumSummary, laplacian, summarize
from .utils.quadrature import composite_rule

if TYPE_CHECKING:
    from .graphons.base import Graphon


@attr.s(auto_attribs=True, frozen=True)
class ResistanceReport:
    """Three routes to the average effective resistance."""

    n: int
    r_ave_spectral: float
    r_ave_pseudoinverse: float
    r_ave_graphon: float
    connected: bool = True

    @property
    def abs_error(self) -> float:
        """|R_spectral - R_graphon|."""
        return abs(self.r_ave_spectral - self.r_ave_graphon)

    @property
    def rel_error(self) -> float:
        """Absolute error relative to the sampled graph's value."""
        return self.abs_error / self.r_ave_spectral


def _connectivity_threshold(n: int) -> float:
    return CONNECTIVITY_TOL * n


def r_ave_spectral(summary: SpectrumSummary) -> float:
    """(1/N) sum over i >= 2 of 1 / lambda_i."""
    lambda_2 = float(summary.lambdas[1])
    if lambda_2 <= _connectivity_threshold(summary.n):
        raise DisconnectedGraphException(lambda_2, summary.n)
    return float(np.sum(1.0 / summary.lambdas[1:]) / summary.n)


def r_ave_pseudoinverse(laplacian_matrix: np.ndarray) -> float:
    """Average of all pairwise effective resistances through L^+."""
    matrix = np.asarray(laplacian_matrix, dtype=float)
    n = matrix.shape[0]
    eigenvalues, eigenvectors = linalg.eigh(matrix)
    kept = eigenvalues > _connectivity_threshold(n)
    if np.count_nonzero(~kept) > 1:
        raise DisconnectedGraphException(float(eigenvalues[1]), n)
    basis = eigenvectors[:, kept]
    pseudoinverse = (basis / eigenvalues[kept]) @ basis.T
    diagonal = np.diag(pseudoinverse)
    resistances = diagonal[:, None] + diagonal[None, :] - 2.0 * pseudoinverse
    return float(resistances.sum() / (2 * n * n))


def r_ave_graphon(
    graphon: Graphon,
    n: int,
    *,
    order: int = DEGREE_QUADRATURE_ORDER,
    subdivisions: int = RESISTANCE_QUADRATURE_SUBDIVISIONS,
) -> float:
    """(1/N) integral of 1 / d."""
    if graphon.delta_W <= 0:
        raise NumericalContractException(f"delta_W={graphon.delta_W} must be positive")
    nodes, weights = composite_rule(graphon.quadrature_panels, order, subdivisions)
    return float(np.dot(1.0 / degree(graphon, nodes, order=order), weights) / n)


def resistance_report(
    graphon: Graphon,
    graph: SimpleGraph | WeightedGraph,
    summary: SpectrumSummary | None = None,
) -> ResistanceReport:
    """Spectral, pseudoinverse and graphon average resistances of one graph."""
    summary = summary or summarize(graph)
    return ResistanceReport(
        n=graph.n,
        r_ave_spectral=r_ave_spectral(summary),
        r_ave_pseudoinverse=r_ave_pseudoinverse(laplacian(graph)),
        r_ave_graphon=r_ave_graphon(graphon, graph.n),
    )
