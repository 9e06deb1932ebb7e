"""Graphon-level numerics: degree, extrema and the spectra of T_W and L_W."""

from __future__ import annotations

from collections.abc import Callable
from functools import partial
import math
from typing import TYPE_CHECKING, Any

import attr
import numpy as np
from scipy import linalg

from .const import (
    DEGREE_QUADRATURE_ORDER,
    EXTREMA_GRID_STEP,
    MONOTONE_TOL,
    NYSTROM_DEFAULT_RESOLUTION,
    NYSTROM_MIN_RESOLUTION,
    NYSTROM_RESOLUTION_CAP,
    OPERATOR_NORM_MIN_RESOLUTION,
    OPERATOR_NORM_RESOLUTION_CAP,
    OPERATOR_NORM_TOL,
    REARRANGEMENT_RESOLUTION,
    SEPARATION_TOL,
)
from .enums import Monotonicity
from .exceptions import NumericalContractException
from .utils.logger import LOGGER
from .utils.quadrature import composite_rule

if TYPE_CHECKING:
    from .graphons.base import ExtremaBrackets, Graphon


@attr.s(auto_attribs=True, frozen=True)
class OperatorSpectrumEstimate:
    """Discretized spectral data of T_W and of the graphon Laplacian L_W."""

    resolution: int
    operator_norm: float | None = None
    laplacian_eigenvalues: tuple[float, ...] = ()
    essential_range: tuple[float, float] | None = None
    isolated_below: tuple[float, ...] = ()
    isolated_above: tuple[float, ...] = ()
    limit_mu2: float | None = None
    converged: bool = True
    achieved_tolerance: float = 0.0


def midpoints(resolution: int) -> np.ndarray:
    """Midpoints of the uniform partition of [0, 1]."""
    return (np.arange(resolution) + 0.5) / resolution


def degree(graphon: Graphon, x: Any, *, order: int = DEGREE_QUADRATURE_ORDER) -> Any:
    """d(x) = integral of W(x, y) dy, composite Gauss-Legendre split at breakpoints."""
    points = np.asarray(x, dtype=float)
    if points.size and (points.min() < 0.0 or points.max() > 1.0):
        raise NumericalContractException("Degree requested outside [0, 1]")
    nodes, weights = composite_rule(graphon.quadrature_panels, order)
    values = np.clip(graphon.kernel(points[..., None], nodes) @ weights, 0.0, 1.0)
    return float(values) if values.ndim == 0 else values


def degree_function(graphon: Graphon, *, order: int = DEGREE_QUADRATURE_ORDER) -> Callable:
    """Return d as a vectorized callable."""
    return partial(degree, graphon, order=order)


def edge_density(graphon: Graphon, *, order: int = DEGREE_QUADRATURE_ORDER) -> float:
    """Double integral of W."""
    nodes, weights = composite_rule(graphon.quadrature_panels, order)
    return float(weights @ graphon.kernel(nodes[:, None], nodes[None, :]) @ weights)


def _block_midpoints(breakpoints: tuple[float, ...], grid_step: float) -> np.ndarray:
    """Cell midpoints inside every block, cells no wider than grid_step."""
    points = []
    for left, right in zip(breakpoints[:-1], breakpoints[1:]):
        cells = math.ceil((right - left) / grid_step)
        points.append(left + (np.arange(cells) + 0.5) * (right - left) / cells)
    return np.concatenate(points)


def estimate_extrema(graphon: Graphon, grid_step: float = EXTREMA_GRID_STEP) -> ExtremaBrackets:
    """Certified brackets for inf W, inf d and sup d.

    Within a block the kernel moves by at most L (|dx| + |dy|) and the degree
    by at most L |dx|, which turns grid minima into brackets.
    """
    # pylint: disable=import-outside-toplevel
    from .graphons.base import ExtremaBrackets

    if not 0.0 < grid_step < graphon.min_block_width:
        raise NumericalContractException(
            f"Grid step {grid_step} must be positive and below the narrowest block "
            f"width {graphon.min_block_width}"
        )
    points = _block_midpoints(graphon.breakpoints, grid_step)
    margin = 2.0 * graphon.lipschitz_L * grid_step

    kernel_min = float(np.min(graphon.kernel(points[:, None], points[None, :])))
    degrees = degree(graphon, points)
    delta_high = float(degrees.min())
    degree_max = float(degrees.max())

    return ExtremaBrackets(
        eta_low=kernel_min - margin,
        eta_high=kernel_min,
        delta_low=delta_high - margin,
        delta_high=delta_high,
        degree_max_low=degree_max,
        degree_max_high=degree_max + margin,
        grid_step=grid_step,
    )


def _discretized_operator(graphon: Graphon, resolution: int) -> np.ndarray:
    points = midpoints(resolution)
    return graphon.kernel(points[:, None], points[None, :]) / resolution


def _discretized_operator_norm(graphon: Graphon, resolution: int) -> float:
    eigenvalues = linalg.eigh(_discretized_operator(graphon, resolution), eigvals_only=True)
    return float(np.max(np.abs(eigenvalues)))


def operator_norm(
    graphon: Graphon,
    resolution: int = OPERATOR_NORM_MIN_RESOLUTION,
    *,
    tol: float = OPERATOR_NORM_TOL,
    cap: int = OPERATOR_NORM_RESOLUTION_CAP,
) -> OperatorSpectrumEstimate:
    """Estimate |||T_W||| by midpoint discretization, doubling until stable."""
    if resolution < OPERATOR_NORM_MIN_RESOLUTION:
        raise NumericalContractException(
            f"Resolution {resolution} is below {OPERATOR_NORM_MIN_RESOLUTION}"
        )
    estimate = _discretized_operator_norm(graphon, resolution)
    achieved = math.inf
    converged = False
    while resolution * 2 <= cap:
        resolution *= 2
        refined = _discretized_operator_norm(graphon, resolution)
        achieved = abs(refined - estimate)
        estimate = refined
        if achieved < tol:
            converged = True
            break

    if not converged:
        LOGGER.warning(
            "<OperatorNorm> %s did not converge at resolution %s (last difference %.3e)",
            graphon.label,
            resolution,
            achieved,
        )
    else:
        LOGGER.debug(
            "<OperatorNorm> %s = %.6f at resolution %s", graphon.label, estimate, resolution
        )
    return OperatorSpectrumEstimate(
        resolution=resolution,
        operator_norm=estimate,
        converged=converged,
        achieved_tolerance=achieved,
    )


def drop_trivial_eigenvalue(eigenvalues: np.ndarray, separation_tol: float) -> np.ndarray:
    """Remove one eigenvalue within separation_tol of 0, the constants."""
    if not eigenvalues.size:
        return eigenvalues
    index = int(np.argmin(np.abs(eigenvalues)))
    if abs(eigenvalues[index]) > separation_tol:
        return eigenvalues
    return np.delete(eigenvalues, index)


def graphon_laplacian_spectrum(
    graphon: Graphon,
    resolution: int = NYSTROM_DEFAULT_RESOLUTION,
    separation_tol: float = SEPARATION_TOL,
    *,
    cap: int = NYSTROM_RESOLUTION_CAP,
) -> OperatorSpectrumEstimate:
    """Nystrom approximation of the spectrum of L_W = d - T_W.

    The diagonal holds the midpoint-rule degree at the collocation nodes, so
    constants stay exactly in the kernel of the discretization.
    """
    if resolution < NYSTROM_MIN_RESOLUTION:
        raise NumericalContractException(
            f"Resolution {resolution} is below {NYSTROM_MIN_RESOLUTION}"
        )
    converged = True
    if resolution > cap:
        LOGGER.warning("<Nystrom> Resolution %s capped at %s", resolution, cap)
        resolution = cap
        converged = False

    operator = _discretized_operator(graphon, resolution)
    degrees = operator.sum(axis=1)
    eigenvalues = linalg.eigh(np.diag(degrees) - operator, eigvals_only=True)
    operator_eigenvalues = linalg.eigh(operator, eigvals_only=True)

    lower, upper = float(degrees.min()), float(degrees.max())
    below = eigenvalues[eigenvalues < lower - separation_tol]
    above = eigenvalues[eigenvalues > upper + separation_tol]

    nontrivial = drop_trivial_eigenvalue(below, separation_tol)
    limit_mu2 = float(min([graphon.delta_W, *nontrivial.tolist(), *above.tolist()]))

    return OperatorSpectrumEstimate(
        resolution=resolution,
        operator_norm=float(np.max(np.abs(operator_eigenvalues))),
        laplacian_eigenvalues=tuple(eigenvalues.tolist()),
        essential_range=(lower, upper),
        isolated_below=tuple(below.tolist()),
        isolated_above=tuple(above.tolist()),
        limit_mu2=limit_mu2,
        converged=converged,
    )


def kernel_monotonicity(graphon: Graphon, resolution: int = 256) -> Monotonicity:
    """Monotonicity of W(x, y) in x for every y, sampled on a midpoint grid."""
    points = midpoints(resolution)
    steps = np.diff(graphon.kernel(points[:, None], points[None, :]), axis=0)
    if np.all(steps >= -MONOTONE_TOL):
        return Monotonicity.NONDECREASING
    if np.all(steps <= MONOTONE_TOL):
        return Monotonicity.NONINCREASING
    return Monotonicity.NONE


def nondecreasing_rearrangement(
    graphon: Graphon, resolution: int = REARRANGEMENT_RESOLUTION
) -> tuple[Callable[[np.ndarray], np.ndarray], tuple[float, ...], Monotonicity]:
    """Return the nondecreasing rearrangement of d, its kink points and d's monotonicity.

    Monotone degrees are rearranged exactly, otherwise the sampled quantile
    function is interpolated.
    """
    points = midpoints(resolution)
    samples = degree(graphon, points)
    steps = np.diff(samples)
    if np.all(steps >= -MONOTONE_TOL):
        return degree_function(graphon), graphon.breakpoints, Monotonicity.NONDECREASING
    if np.all(steps <= MONOTONE_TOL):
        reflected = tuple(sorted(1.0 - point for point in graphon.breakpoints))

        def reversed_degree(x: np.ndarray) -> np.ndarray:
            return degree(graphon, 1.0 - np.asarray(x, dtype=float))

        return reversed_degree, reflected, Monotonicity.NONINCREASING

    ordered = np.sort(samples)

    def quantile(x: np.ndarray) -> np.ndarray:
        return np.interp(x, points, ordered)

    return quantile, (0.0, 1.0), Monotonicity.NONE


def operator_deviation(graphon: Graphon, adjacency: np.ndarray, refinement: int = 2) -> float:
    """|||T_{W_G} - T_W||| for the step graphon of an adjacency matrix.

    Both kernels are sampled on a midpoint grid refined `refinement` times per
    step interval.
    """
    adjacency = np.asarray(adjacency, dtype=float)
    n = adjacency.shape[0]
    if refinement < 1:
        raise NumericalContractException("Refinement must be at least 1")
    resolution = n * refinement
    owner = np.arange(resolution) // refinement
    points = midpoints(resolution)
    difference = adjacency[np.ix_(owner, owner)] - graphon.kernel(points[:, None], points[None, :])
    eigenvalues = linalg.eigh(difference, eigvals_only=True)
    return float(np.max(np.abs(eigenvalues)) / resolution)
