"""Effective resistance tests."""

import math

import numpy as np
import pytest

from graphon_lab.exceptions import DisconnectedGraphException, NumericalContractException
from graphon_lab.graphons import BilinearGraphon, BlockGraphon, ConstantGraphon
from graphon_lab.resistance import (
    ResistanceReport,
    r_ave_graphon,
    r_ave_pseudoinverse,
    r_ave_spectral,
    resistance_report,
)
from graphon_lab.sampler import SimpleGraph, deterministic_weighted_graph, sample_realization
from graphon_lab.spectral import laplacian, summarize

from tests.common import complete_graph, path_graph


def test_complete_graph_resistance():
    n = 5
    graph = complete_graph(n)
    # Every pair has resistance 2/n.
    expected = (n * (n - 1) / 2) * (2 / n) / n**2
    assert r_ave_spectral(summarize(graph)) == pytest.approx(expected)
    assert r_ave_pseudoinverse(laplacian(graph)) == pytest.approx(expected)


def test_path_graph_resistance():
    n = 4
    # Resistance between i and j on a path is |i - j|.
    total = sum(j - i for i in range(n) for j in range(i + 1, n))
    assert r_ave_pseudoinverse(laplacian(path_graph(n))) == pytest.approx(total / n**2)
    assert r_ave_spectral(summarize(path_graph(n))) == pytest.approx(total / n**2)


@pytest.mark.parametrize("n", [16, 32, 64, 128, 256])
def test_spectral_matches_pseudoinverse(bilinear_graphon: BilinearGraphon, n: int):
    for trial in range(10):
        graph = sample_realization(bilinear_graphon, n, 11, trial).simple
        summary = summarize(graph)
        assert summary.lambdas[1] > 1e-8
        assert r_ave_spectral(summary) == pytest.approx(
            r_ave_pseudoinverse(laplacian(graph)), abs=1e-8
        )


def test_disconnected_graph_raises():
    adjacency = np.zeros((4, 4))
    adjacency[0, 1] = adjacency[1, 0] = adjacency[2, 3] = adjacency[3, 2] = 1.0
    graph = SimpleGraph(adjacency=adjacency)
    with pytest.raises(DisconnectedGraphException) as exception:
        r_ave_spectral(summarize(graph))
    assert exception.value.n == 4
    with pytest.raises(DisconnectedGraphException):
        r_ave_pseudoinverse(laplacian(graph))


def test_r_ave_graphon(bilinear_graphon: BilinearGraphon, two_block_graphon: BlockGraphon):
    n = 100
    assert r_ave_graphon(bilinear_graphon, n) == pytest.approx(
        -2.5 * math.log(0.6) / n, abs=1e-10
    )
    assert r_ave_graphon(bilinear_graphon, 1) == pytest.approx(1.27706, abs=1e-5)
    assert r_ave_graphon(two_block_graphon, n) == pytest.approx(2 / n)

    with pytest.raises(NumericalContractException):
        r_ave_graphon(ConstantGraphon(p=0.0), n)


def test_resistance_report(bilinear_graphon: BilinearGraphon):
    realization = sample_realization(bilinear_graphon, 120, 4, 0)
    report = resistance_report(bilinear_graphon, realization.simple)
    assert report.n == 120
    assert report.connected
    assert report.r_ave_spectral == pytest.approx(report.r_ave_pseudoinverse, abs=1e-8)
    assert report.abs_error == pytest.approx(abs(report.r_ave_spectral - report.r_ave_graphon))
    assert report.rel_error == pytest.approx(report.abs_error / report.r_ave_spectral)
    assert report.rel_error < 0.5


def test_constant_weighted_graph_resistance(constant_graphon: ConstantGraphon):
    n, p = 60, constant_graphon.p
    summary = summarize(deterministic_weighted_graph(constant_graphon, n))
    assert r_ave_spectral(summary) == pytest.approx((n - 1) / (p * n**2))
    assert r_ave_graphon(constant_graphon, n) == pytest.approx(1 / (n * p))
    assert r_ave_graphon(constant_graphon, n) - r_ave_spectral(summary) == pytest.approx(
        1 / (n**2 * p)
    )


def test_r_ave_graphon_scales_as_one_over_n(bilinear_graphon: BilinearGraphon):
    scaled = [n * r_ave_graphon(bilinear_graphon, n) for n in (10, 100, 1000)]
    assert scaled == pytest.approx([scaled[0]] * 3, rel=1e-12)


def test_resistance_sandwich(bilinear_graphon: BilinearGraphon):
    for trial in range(5):
        realization = sample_realization(bilinear_graphon, 80, 4, trial)
        summary = summarize(realization.simple)
        n = summary.n
        value = r_ave_spectral(summary)
        assert (n - 1) / n**2 <= value <= 1 / (n * summary.spectral_gap)


def test_rel_error_is_relative_to_the_graph():
    report = ResistanceReport(
        n=10, r_ave_spectral=0.25, r_ave_pseudoinverse=0.25, r_ave_graphon=0.2
    )
    assert report.abs_error == pytest.approx(0.05)
    assert report.rel_error == pytest.approx(0.2)
