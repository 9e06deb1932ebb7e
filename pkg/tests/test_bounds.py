"""Bound formula tests."""

import math

import pytest

from graphon_lab.bounds import (
    BoundInputs,
    asymptotic_rate,
    b_n,
    check_large_enough,
    coverage_targets,
    evaluate_realization,
    gamma_varphi,
    result_bounds,
    theta_phi,
    thm2_realized_bound,
)
from graphon_lab.enums import BoundResult, SamplingMode
from graphon_lab.exceptions import BoundDomainException
from graphon_lab.graphons import BilinearGraphon, ConstantGraphon
from graphon_lab.sampler import sample_realization

OPERATOR_NORM = 0.81512


def _inputs(n: int = 1000, **overrides) -> BoundInputs:
    values = {
        "n": n,
        "nu": 0.1,
        "lipschitz_L": 0.8,
        "K": 0,
        "eta_W": 0.2,
        "delta_W": 0.6,
        "operator_norm": OPERATOR_NORM,
    }
    values.update(overrides)
    return BoundInputs(**values)


def test_reference_constants():
    b, theta, phi = theta_phi(_inputs())
    assert b == pytest.approx(0.272310, abs=1e-6)
    assert theta == pytest.approx(0.435696, abs=1e-6)
    assert phi == pytest.approx(0.634729, abs=1e-6)

    gamma, varphi = gamma_varphi(_inputs())
    assert gamma == pytest.approx(0.2225, abs=1e-4)
    scale = math.sqrt(math.log(20000) / 1000)
    assert varphi == pytest.approx((1 / math.sqrt(0.2) + 2) * scale)


def test_b_n():
    assert b_n(1000, 0.1) == pytest.approx(0.001 + math.sqrt(8 * math.log(10000) / 1001))
    assert b_n(1000, 0.1, SamplingMode.DETERMINISTIC) == 0.001

    with pytest.raises(BoundDomainException):
        b_n(1000, 0.5)
    with pytest.raises(BoundDomainException):
        b_n(0, 0.1)


def test_deterministic_latents_shrink_theta():
    _, theta, _ = theta_phi(_inputs(sampling_mode=SamplingMode.DETERMINISTIC))
    assert theta == pytest.approx(2 * 0.8 / 1000)


def test_theta_undefined_for_negative_radicand():
    with pytest.raises(BoundDomainException, match="theta is undefined"):
        theta_phi(_inputs(n=16, lipschitz_L=0.0, K=2))


def test_gamma_needs_positive_eta():
    with pytest.raises(BoundDomainException):
        gamma_varphi(_inputs(eta_W=0.0))


def test_input_domain():
    with pytest.raises(BoundDomainException):
        _inputs(nu=0.0)
    with pytest.raises(BoundDomainException):
        _inputs(nu=0.4)
    with pytest.raises(BoundDomainException):
        _inputs(n=0)


def test_prop_bounds():
    inputs = _inputs(n=100000)
    bounds = result_bounds(inputs)
    _, theta, phi = theta_phi(inputs)
    gamma, varphi = gamma_varphi(inputs)
    prop1 = (2 / 100000) ** 0.25 * math.sqrt(OPERATOR_NORM + phi)
    assert bounds.prop1 == pytest.approx(prop1)
    assert bounds.prop2 == pytest.approx(prop1 + phi)
    assert bounds.thm1 == pytest.approx(
        varphi + (2 / 100000) ** 0.25 * math.sqrt(OPERATOR_NORM + theta) + theta
    )
    inner = (
        1 / 100000
        + phi / 0.6
        + 2**0.25 * math.sqrt(OPERATOR_NORM + phi) / (100000**0.25 * (0.2 - varphi))
    )
    assert bounds.thm2 == pytest.approx(inner / (100000 * (0.2 - gamma)))


def test_prop1_reference_value():
    _, _, phi = theta_phi(_inputs())
    assert (2 / 1000) ** 0.25 * math.sqrt(OPERATOR_NORM + phi) == pytest.approx(0.2546, abs=1e-4)


def test_resistance_bound_undefined_when_gamma_exceeds_eta():
    inputs = _inputs()
    graphon = BilinearGraphon(a=0.8)
    # The sample-size condition holds while gamma > eta_W.
    assert check_large_enough(inputs, graphon).cond_thm2
    with pytest.raises(BoundDomainException, match="Resistance bound undefined"):
        result_bounds(inputs)


def test_check_large_enough(bilinear_graphon: BilinearGraphon):
    flags = check_large_enough(_inputs(), bilinear_graphon)
    assert flags.all_conditions
    assert flags.as_dict() == {
        "cond_a": True,
        "cond_b": True,
        "cond_c": True,
        "cond_thm2": True,
    }

    small = check_large_enough(_inputs(n=10), bilinear_graphon)
    assert not small.cond_c
    assert not small.all_conditions


def test_thm2_realized_bound():
    inputs = _inputs(n=100)
    value = thm2_realized_bound(inputs, 0.5, 0.6, 0.4)
    assert value == pytest.approx(
        1 / (100**2 * 0.6)
        + 2**0.25 * math.sqrt(OPERATOR_NORM + 0.5) / (100**1.25 * 0.4 * 0.6)
        + 0.5 / (100 * 0.6 * 0.6)
    )
    with pytest.raises(BoundDomainException):
        thm2_realized_bound(inputs, 0.5, 0.6, 0.0)


def test_coverage_targets():
    targets = coverage_targets(0.1)
    assert targets[BoundResult.PROP1] == pytest.approx(0.8)
    assert targets[BoundResult.THM1] == pytest.approx(0.7)
    assert targets[BoundResult.MU2_PAIR] == pytest.approx(0.85)

    deterministic = coverage_targets(0.1, SamplingMode.DETERMINISTIC)
    assert deterministic[BoundResult.PROP1] == pytest.approx(0.9)
    assert deterministic[BoundResult.MIN_DEGREE] == pytest.approx(0.9)


def test_asymptotic_rate():
    assert asymptotic_rate(1000, 0.1) == pytest.approx((math.log(10000) / 1000) ** 0.25)
    assert asymptotic_rate(10000, 0.1) < asymptotic_rate(1000, 0.1)


def test_evaluate_realization(bilinear_graphon: BilinearGraphon, caplog: pytest.LogCaptureFixture):
    n = 200
    realization = sample_realization(bilinear_graphon, n, 7, 0)
    inputs = BoundInputs.from_graphon(
        bilinear_graphon, n, 0.1, SamplingMode.RANDOM, OPERATOR_NORM
    )
    report = evaluate_realization(
        bilinear_graphon, realization.weighted, realization.simple, inputs, operator_refinement=2
    )

    assert report.n == n
    assert not report.thm1_hypothesis_met
    assert "Large-enough condition cond_thm2 fails at N=200" in caplog.text
    assert "is not nondecreasing" in caplog.text
    assert not report.large_enough.cond_thm2
    assert not report.thm2_bound_finite
    assert report.bounds[BoundResult.THM2] == math.inf
    assert report.holds[BoundResult.THM2] is True
    assert report.holds[BoundResult.PROP1] is True
    assert report.holds[BoundResult.PROP2] is True
    assert report.holds[BoundResult.DEGREE_WEIGHTED] is True
    assert report.holds[BoundResult.EIGENVALUE_DEVIATION] is True
    assert report.lhs[BoundResult.PROP2] <= report.lhs[BoundResult.PROP1] + 0.1
    assert BoundResult.OPERATOR_SIMPLE in report.lhs
    assert report.coverage[BoundResult.PROP1] == pytest.approx(0.8)

    row = report.as_row()
    assert row["thm2_bound"] == math.inf
    assert row["rate"] == pytest.approx(asymptotic_rate(n, 0.1))
    assert row["prop1_lhs"] == report.lhs[BoundResult.PROP1]
    assert row["large_enough_cond_a"] is True
    assert "operator_weighted_holds" in row


def test_evaluate_realization_size_mismatch(bilinear_graphon: BilinearGraphon):
    realization = sample_realization(bilinear_graphon, 20, 7, 0)
    with pytest.raises(BoundDomainException):
        evaluate_realization(
            bilinear_graphon,
            realization.weighted,
            realization.simple,
            _inputs(n=30),
        )


def test_large_enough_at_n_100(bilinear_graphon: BilinearGraphon):
    flags = check_large_enough(_inputs(n=100), bilinear_graphon)
    assert flags.cond_a
    assert flags.cond_b
    assert flags.cond_c


def test_bounds_nonincreasing_in_n():
    grid = [64 * 2**k for k in range(7)]
    values = []
    for n in grid:
        inputs = _inputs(n=n)
        _, theta, phi = theta_phi(inputs)
        gamma, varphi = gamma_varphi(inputs)
        prop1 = (2 / n) ** 0.25 * math.sqrt(OPERATOR_NORM + phi)
        assert phi >= theta >= 0
        values.append((theta, phi, gamma, varphi, prop1, prop1 + phi))

    for previous, current in zip(values, values[1:]):
        assert all(later <= earlier for earlier, later in zip(previous, current))


def test_constant_graphon_hypothesis_met(constant_graphon: ConstantGraphon, caplog: pytest.LogCaptureFixture):
    n = 50
    realization = sample_realization(constant_graphon, n, 3, 0)
    inputs = BoundInputs.from_graphon(constant_graphon, n, 0.1, SamplingMode.RANDOM, 0.5)
    report = evaluate_realization(constant_graphon, realization.weighted, realization.simple, inputs)

    assert report.thm1_hypothesis_met
    assert "is not nondecreasing" not in caplog.text


@pytest.mark.slow
def test_empirical_coverage(bilinear_graphon: BilinearGraphon):
    n, nu, trials = 500, 0.2, 50
    inputs = BoundInputs.from_graphon(bilinear_graphon, n, nu, SamplingMode.RANDOM, OPERATOR_NORM)
    prop1 = thm2 = 0
    for trial in range(trials):
        realization = sample_realization(bilinear_graphon, n, 2024, trial)
        report = evaluate_realization(
            bilinear_graphon, realization.weighted, realization.simple, inputs
        )
        prop1 += bool(report.holds[BoundResult.PROP1])
        thm2 += bool(report.holds[BoundResult.THM2])

    assert prop1 / trials >= 1 - 2 * nu
    assert thm2 / trials >= 1 - 3 * nu
