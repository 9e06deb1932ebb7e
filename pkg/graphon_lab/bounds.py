"""Non-asymptotic bounds and their check on one realization."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any

import attr
import numpy as np

from .const import DEGREE_QUADRATURE_ORDER, STEP_QUADRATURE_ORDER
from .core import degree_function, kernel_monotonicity, nondecreasing_rearrangement, operator_deviation
from .enums import BoundResult, Monotonicity, SamplingMode
from .exceptions import BoundDomainException
from .resistance import resistance_report
from .sampler import SimpleGraph, WeightedGraph
from .spectral import (
    SpectrumSummary,
    optimal_permutation_distance,
    step_functions,
    step_l2_distance,
    step_to_function_l2,
    summarize,
)
from .utils.logger import LOGGER

if TYPE_CHECKING:
    from .graphons.base import Graphon


def _check_nu(nu: float) -> float:
    if not 0.0 < nu < math.exp(-1):
        raise BoundDomainException(f"nu={nu} is not in (0, 1/e)")
    return float(nu)


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class BoundInputs:
    """Everything the bound formulas read."""

    n: int
    nu: float = attr.ib(converter=_check_nu)
    sampling_mode: SamplingMode = SamplingMode.RANDOM
    lipschitz_L: float
    K: int
    eta_W: float
    delta_W: float
    operator_norm: float

    def __attrs_post_init__(self) -> None:
        if self.n < 2:
            raise BoundDomainException(f"N={self.n} must be at least 2")

    @classmethod
    def from_graphon(
        cls,
        graphon: Graphon,
        n: int,
        nu: float,
        sampling_mode: SamplingMode,
        operator_norm: float,
    ) -> BoundInputs:
        """Collect the graphon constants."""
        return cls(
            n=n,
            nu=nu,
            sampling_mode=sampling_mode,
            lipschitz_L=graphon.lipschitz_L,
            K=graphon.K,
            eta_W=graphon.eta_W,
            delta_W=graphon.delta_W,
            operator_norm=operator_norm,
        )


@attr.s(auto_attribs=True, frozen=True)
class LargeEnough:
    """Flags of the sample-size conditions, plus the extra one for the resistance bound."""

    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_thm2: bool

    @property
    def all_conditions(self) -> bool:
        """Whether N is large enough for every bound."""
        return self.cond_a and self.cond_b and self.cond_c

    def as_dict(self) -> dict[str, bool]:
        """Return the flags by name."""
        return attr.asdict(self)


@attr.s(auto_attribs=True, frozen=True)
class ResultBounds:
    """Right-hand sides of the four headline results."""

    prop1: float
    prop2: float
    thm1: float
    thm2: float


@attr.s(auto_attribs=True, frozen=True)
class BoundReport:
    """Bounds, measured left-hand sides and their comparison on one realization."""

    n: int
    nu: float
    mode: SamplingMode
    b_N: float  # noqa: N815
    theta: float
    phi: float
    gamma: float
    varphi: float
    rate: float
    large_enough: LargeEnough
    bounds: dict[BoundResult, float]
    lhs: dict[BoundResult, float]
    holds: dict[BoundResult, bool | None]
    coverage: dict[BoundResult, float]
    thm1_hypothesis_met: bool
    thm2_bound_finite: bool

    def as_row(self) -> dict[str, Any]:
        """Flatten for CSV output."""
        row: dict[str, Any] = {
            "b_N": self.b_N,
            "theta": self.theta,
            "phi": self.phi,
            "gamma": self.gamma,
            "varphi": self.varphi,
            "rate": self.rate,
            "thm1_hypothesis_met": self.thm1_hypothesis_met,
            "thm2_bound_finite": self.thm2_bound_finite,
            **{f"large_enough_{key}": value for key, value in self.large_enough.as_dict().items()},
        }
        for result in BoundResult:
            if result not in self.bounds:
                continue
            row[f"{result}_bound"] = self.bounds[result]
            row[f"{result}_lhs"] = self.lhs.get(result)
            row[f"{result}_holds"] = self.holds.get(result)
        return row


def b_n(n: int, nu: float, mode: SamplingMode = SamplingMode.RANDOM) -> float:
    """Latent spacing scale, 1/N plus the concentration term when latents are random."""
    nu = _check_nu(nu)
    if n < 2:
        raise BoundDomainException(f"N={n} must be at least 2")
    if mode == SamplingMode.DETERMINISTIC:
        return 1.0 / n
    return 1.0 / n + math.sqrt(8.0 * math.log(n / nu) / (n + 1))


def theta_phi(inputs: BoundInputs) -> tuple[float, float, float]:
    """(b_N, theta(N), phi(N))."""
    b = b_n(inputs.n, inputs.nu, inputs.sampling_mode)
    L, K = inputs.lipschitz_L, inputs.K  # noqa: N806
    radicand = (L**2 - K**2) * b**2 + K * b
    if radicand < 0:
        raise BoundDomainException(
            f"theta is undefined: (L^2 - K^2) b_N^2 + K b_N = {radicand:.3e} < 0 "
            f"(L={L}, K={K}, b_N={b:.4f})"
        )
    theta = 2.0 * math.sqrt(radicand)
    phi = math.sqrt(4.0 * math.log(2 * inputs.n / inputs.nu) / inputs.n) + theta
    return b, theta, phi


def gamma_varphi(inputs: BoundInputs) -> tuple[float, float]:
    """(gamma(N), tilde phi(N)), both need eta_W > 0."""
    if inputs.eta_W <= 0:
        raise BoundDomainException(f"eta_W={inputs.eta_W} must be positive")
    scale = math.log(2 * inputs.n / inputs.nu) / inputs.n
    gamma = math.sqrt(scale / inputs.eta_W)
    varphi = (1.0 / math.sqrt(inputs.eta_W) + 2.0) * math.sqrt(scale)
    return gamma, varphi


def check_large_enough(inputs: BoundInputs, graphon: Graphon) -> LargeEnough:
    """Evaluate the sample-size conditions; degree_max is the upper bracket."""
    n, nu = inputs.n, inputs.nu
    log_term = math.log(2 * n / nu) / n
    return LargeEnough(
        cond_a=2.0 / n < graphon.min_block_width,
        cond_b=log_term + (2 * inputs.K + 3 * inputs.lipschitz_L) / n < graphon.degree_max,
        cond_c=n * math.exp(-n / 5.0) < nu,
        cond_thm2=log_term < inputs.eta_W**2 / (1 + 2 * inputs.eta_W),
    )


def _prop1_bound(inputs: BoundInputs, phi: float) -> float:
    return (2.0 / inputs.n) ** 0.25 * math.sqrt(inputs.operator_norm + phi)


def _thm1_bound(inputs: BoundInputs, theta: float, varphi: float) -> float:
    return varphi + (2.0 / inputs.n) ** 0.25 * math.sqrt(inputs.operator_norm + theta) + theta


def _thm2_bound(inputs: BoundInputs, phi: float, gamma: float, varphi: float) -> float:
    n, eta = inputs.n, inputs.eta_W
    if gamma >= eta or varphi >= eta:
        raise BoundDomainException(
            f"Resistance bound undefined at N={n}: gamma={gamma:.4f}, "
            f"tilde phi={varphi:.4f} must both be below eta_W={eta}"
        )
    if inputs.delta_W <= 0:
        raise BoundDomainException(f"delta_W={inputs.delta_W} must be positive")
    inner = (
        1.0 / n
        + phi / inputs.delta_W
        + 2**0.25 * math.sqrt(inputs.operator_norm + phi) / (n**0.25 * (eta - varphi))
    )
    return inner / (n * (eta - gamma))


def result_bounds(inputs: BoundInputs) -> ResultBounds:
    """All four bounds; raises when the resistance bound is undefined."""
    _, theta, phi = theta_phi(inputs)
    gamma, varphi = gamma_varphi(inputs)
    prop1 = _prop1_bound(inputs, phi)
    return ResultBounds(
        prop1=prop1,
        prop2=prop1 + phi,
        thm1=_thm1_bound(inputs, theta, varphi),
        thm2=_thm2_bound(inputs, phi, gamma, varphi),
    )


def thm2_realized_bound(
    inputs: BoundInputs, phi: float, min_degree: float, mu2: float
) -> float:
    """Resistance bound with the realized min degree and gap in place of eta_W.

    min_degree and mu2 are normalized by N.
    """
    if min_degree <= 0 or mu2 <= 0 or inputs.delta_W <= 0:
        raise BoundDomainException("Realized resistance bound needs positive degrees and gap")
    n = inputs.n
    return (
        1.0 / (n**2 * min_degree)
        + 2**0.25 * math.sqrt(inputs.operator_norm + phi) / (n**1.25 * mu2 * min_degree)
        + phi / (n * min_degree * inputs.delta_W)
    )


def coverage_targets(nu: float, mode: SamplingMode = SamplingMode.RANDOM) -> dict[BoundResult, float]:
    """Probability with which each inequality is guaranteed."""
    nu = _check_nu(nu)
    # Deterministic latents remove the latent-spacing failure event.
    saved = nu if mode == SamplingMode.DETERMINISTIC else 0.0
    return {
        BoundResult.PROP1: 1 - 2 * nu + saved,
        BoundResult.PROP2: 1 - 2 * nu + saved,
        BoundResult.THM1: 1 - 3 * nu + saved,
        BoundResult.THM2: 1 - 3 * nu + saved,
        BoundResult.THM2_REALIZED: 1 - 2 * nu + saved,
        BoundResult.DEGREE_WEIGHTED: 1 - nu + saved,
        BoundResult.OPERATOR_WEIGHTED: 1 - nu + saved,
        BoundResult.DEGREE_SIMPLE: 1 - 2 * nu + saved,
        BoundResult.OPERATOR_SIMPLE: 1 - 2 * nu + saved,
        BoundResult.MIN_DEGREE: 1 - nu,
        BoundResult.EIGENVALUE_DEVIATION: 1 - 2 * nu,
        BoundResult.MU2_PAIR: 1 - 1.5 * nu,
    }


def asymptotic_rate(n: int, nu: float) -> float:
    """Leading rate (log(N / nu) / N)^(1/4) of the eigenvalue bounds."""
    _check_nu(nu)
    return (math.log(n / nu) / n) ** 0.25


def _holds(lhs: float, bound: float) -> bool | None:
    if math.isnan(lhs) or math.isnan(bound):
        return None
    return lhs <= bound


def evaluate_realization(
    graphon: Graphon,
    weighted: WeightedGraph,
    simple: SimpleGraph,
    inputs: BoundInputs,
    *,
    weighted_summary: SpectrumSummary | None = None,
    simple_summary: SpectrumSummary | None = None,
    operator_refinement: int = 0,
    step_order: int = STEP_QUADRATURE_ORDER,
    degree_order: int = DEGREE_QUADRATURE_ORDER,
) -> BoundReport:
    """Evaluate every bound and measured quantity on one (weighted, simple) pair.

    Bounds are reported even when the large-enough flags fail. An undefined
    resistance bound is reported as +inf and holds vacuously.
    """
    n = simple.n
    if weighted.n != n or inputs.n != n:
        raise BoundDomainException("Realization size and bound inputs differ")
    b, theta, phi = theta_phi(inputs)
    try:
        gamma, varphi = gamma_varphi(inputs)
    except BoundDomainException as exception:
        LOGGER.debug("<Bounds> %s", exception)
        gamma = varphi = math.nan
    large_enough = check_large_enough(inputs, graphon)
    for name, flag in large_enough.as_dict().items():
        if not flag:
            LOGGER.warning("<Bounds> Large-enough condition %s fails at N=%s", name, n)
    thm1_hypothesis_met = (
        inputs.eta_W > 0 and kernel_monotonicity(graphon) == Monotonicity.NONDECREASING
    )
    if not thm1_hypothesis_met:
        LOGGER.warning(
            "<Bounds> %s is not nondecreasing with positive infimum, eigenvalues are compared with the sorted degree",
            graphon.label,
        )

    weighted_summary = weighted_summary or summarize(weighted)
    simple_summary = simple_summary or summarize(simple)
    mu_step, d_step, sorted_d_step = step_functions(simple_summary)
    mu_bar_step, d_bar_step, _ = step_functions(weighted_summary)
    degree = degree_function(graphon, order=degree_order)

    prop1 = _prop1_bound(inputs, phi)
    bounds: dict[BoundResult, float] = {
        BoundResult.PROP1: prop1,
        BoundResult.PROP2: prop1 + phi,
        BoundResult.THM1: math.nan if math.isnan(varphi) else _thm1_bound(inputs, theta, varphi),
        BoundResult.DEGREE_WEIGHTED: theta,
        BoundResult.DEGREE_SIMPLE: phi,
        BoundResult.MIN_DEGREE: gamma,
        BoundResult.EIGENVALUE_DEVIATION: varphi,
        BoundResult.MU2_PAIR: varphi,
    }
    thm2_bound_finite = False
    if not math.isnan(gamma):
        try:
            bounds[BoundResult.THM2] = _thm2_bound(inputs, phi, gamma, varphi)
            thm2_bound_finite = True
        except BoundDomainException as exception:
            LOGGER.debug("<Bounds> %s", exception)
            bounds[BoundResult.THM2] = math.inf
    else:
        bounds[BoundResult.THM2] = math.nan

    rearranged, kinks, _ = nondecreasing_rearrangement(graphon)
    resistance = resistance_report(graphon, simple, simple_summary)
    lhs: dict[BoundResult, float] = {
        BoundResult.PROP1: step_l2_distance(mu_step, sorted_d_step),
        BoundResult.PROP2: optimal_permutation_distance(simple_summary.mus, graphon, step_order).distance,
        BoundResult.THM1: step_to_function_l2(mu_step, rearranged, kinks, step_order),
        BoundResult.THM2: resistance.abs_error,
        BoundResult.DEGREE_WEIGHTED: step_to_function_l2(d_bar_step, degree, graphon.breakpoints, step_order),
        BoundResult.DEGREE_SIMPLE: step_to_function_l2(d_step, degree, graphon.breakpoints, step_order),
        BoundResult.MIN_DEGREE: float(
            np.max(np.abs(simple_summary.deltas_sorted - weighted_summary.deltas_sorted))
        ),
        BoundResult.EIGENVALUE_DEVIATION: float(np.max(np.abs(mu_step.values - mu_bar_step.values))),
        BoundResult.MU2_PAIR: abs(simple_summary.spectral_gap - weighted_summary.spectral_gap),
    }

    try:
        bounds[BoundResult.THM2_REALIZED] = thm2_realized_bound(
            inputs, phi, float(simple_summary.deltas_sorted[0]), simple_summary.spectral_gap
        )
        lhs[BoundResult.THM2_REALIZED] = resistance.abs_error
    except BoundDomainException as exception:
        LOGGER.debug("<Bounds> %s", exception)

    if operator_refinement:
        bounds[BoundResult.OPERATOR_WEIGHTED] = theta
        bounds[BoundResult.OPERATOR_SIMPLE] = phi
        lhs[BoundResult.OPERATOR_WEIGHTED] = operator_deviation(
            graphon, weighted.adjacency, operator_refinement
        )
        lhs[BoundResult.OPERATOR_SIMPLE] = operator_deviation(
            graphon, simple.adjacency, operator_refinement
        )

    return BoundReport(
        n=n,
        nu=inputs.nu,
        mode=inputs.sampling_mode,
        b_N=b,
        theta=theta,
        phi=phi,
        gamma=gamma,
        varphi=varphi,
        rate=asymptotic_rate(n, inputs.nu),
        large_enough=large_enough,
        bounds=bounds,
        lhs=lhs,
        holds={result: _holds(lhs[result], bounds[result]) for result in bounds if result in lhs},
        coverage=coverage_targets(inputs.nu, inputs.sampling_mode),
        thm1_hypothesis_met=thm1_hypothesis_met,
        thm2_bound_finite=thm2_bound_finite,
    )


__all__ = [
    "BoundInputs",
    "BoundReport",
    "LargeEnough",
    "ResultBounds",
    "asymptotic_rate",
    "b_n",
    "check_large_enough",
    "coverage_targets",
    "evaluate_realization",
    "gamma_varphi",
    "result_bounds",
    "theta_phi",
    "thm2_realized_bound",
]
