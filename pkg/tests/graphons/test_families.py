"""Graphon family tests."""

import math

import numpy as np
import pytest

from graphon_lab.core import degree
from graphon_lab.enums import GraphonFamily
from graphon_lab.exceptions import NumericalContractException
from graphon_lab.graphons import (
    BilinearGraphon,
    BlockGraphon,
    ConstantGraphon,
    CustomGraphon,
    GridGraphon,
)
from graphon_lab.utils.csv_io import read_matrix

from tests.common import fixture


def test_constant_graphon(constant_graphon: ConstantGraphon):
    assert constant_graphon.family == GraphonFamily.CONSTANT
    assert constant_graphon.kernel(0.2, 0.9) == 0.5
    assert constant_graphon.kernel(np.zeros(3), 1.0).shape == (3,)
    assert constant_graphon.lipschitz_L == 0.0
    assert constant_graphon.K == 0
    assert (constant_graphon.eta_W, constant_graphon.delta_W) == (0.5, 0.5)

    with pytest.raises(NumericalContractException):
        ConstantGraphon(p=1.5)


def test_bilinear_graphon(bilinear_graphon: BilinearGraphon):
    assert bilinear_graphon.lipschitz_L == 0.8
    assert math.isclose(bilinear_graphon.kernel(0.5, 1.0), 0.6)
    assert math.isclose(bilinear_graphon.eta_W, 0.2)
    assert math.isclose(bilinear_graphon.delta_W, 0.6)
    assert bilinear_graphon.degree_max == 1.0
    assert bilinear_graphon.extrema.exact
    assert math.isclose(bilinear_graphon.closed_form_degree(0.5), 0.8)

    assert BilinearGraphon(a=0.8, lipschitz_L=1.0).lipschitz_L == 1.0
    with pytest.raises(NumericalContractException):
        BilinearGraphon(a=-0.1)


def test_block_graphon(two_block_graphon: BlockGraphon):
    assert two_block_graphon.breakpoints == (0.0, 0.5, 1.0)
    assert two_block_graphon.K == 1
    assert two_block_graphon.kernel(0.2, 0.3) == 0.9
    assert two_block_graphon.kernel(0.2, 0.7) == 0.1
    # 1 belongs to the last block, 0.5 to the second one
    assert two_block_graphon.kernel(1.0, 0.5) == 0.9
    assert np.allclose(two_block_graphon.block_degrees, [0.5, 0.5])
    assert two_block_graphon.eta_W == 0.1
    assert two_block_graphon.delta_W == 0.5
    assert two_block_graphon.min_block_width == 0.5

    with pytest.raises(NumericalContractException):
        BlockGraphon(values=[[0.1, 0.2], [0.3, 0.4]], breakpoints=(0.0, 0.5, 1.0))
    with pytest.raises(NumericalContractException):
        BlockGraphon(values=[[0.1]], breakpoints=(0.0, 0.5, 1.0))


def test_uneven_block_degrees():
    graphon = BlockGraphon(values=[[1.0, 0.0], [0.0, 0.5]], breakpoints=(0.0, 0.25, 1.0))
    assert np.allclose(graphon.block_degrees, [0.25, 0.375])
    assert math.isclose(degree(graphon, 0.1), 0.25)
    assert math.isclose(degree(graphon, 0.9), 0.375)
    assert math.isclose(graphon.delta_W, 0.25)
    assert math.isclose(graphon.degree_max, 0.375)


def test_grid_graphon_reproduces_bilinear(bilinear_graphon: BilinearGraphon):
    graphon = GridGraphon(values=read_matrix(fixture("grid_bilinear.csv")))
    points = np.linspace(0.0, 1.0, 11)
    assert np.allclose(
        graphon.kernel(points[:, None], points[None, :]),
        bilinear_graphon.kernel(points[:, None], points[None, :]),
        atol=1e-14,
    )
    assert math.isclose(graphon.lipschitz_L, 0.8)
    assert graphon.quadrature_panels == (0.0, 0.5, 1.0)
    assert math.isclose(graphon.eta_W, 0.2)
    assert math.isclose(graphon.delta_W, 0.6)
    assert np.allclose(degree(graphon, points), 1 - 0.4 * points, atol=1e-12)

    with pytest.raises(NumericalContractException):
        GridGraphon(values=[[0.0, 1.0], [0.5, 0.0]])


def test_custom_graphon_estimates_extrema():
    graphon = CustomGraphon(function=lambda x, y: 1.0 - 0.8 * x * y, lipschitz_L=0.8)
    extrema = graphon.extrema
    assert not extrema.exact
    assert extrema.eta_low <= 0.2 <= extrema.eta_high
    assert extrema.delta_low <= 0.6 <= extrema.delta_high
    assert extrema.eta_high - extrema.eta_low <= 2 * 0.8 * 1e-3 + 1e-12
    assert graphon.eta_W <= 0.2


def test_overrides_replace_extrema(bilinear_graphon: BilinearGraphon):
    graphon = BilinearGraphon(a=0.8, eta_override=0.15, delta_override=0.55)
    assert graphon.eta_W == 0.15
    assert graphon.delta_W == 0.55
    assert graphon.degree_max == bilinear_graphon.degree_max


def test_pixel_matrix(bilinear_graphon: BilinearGraphon):
    pixels = bilinear_graphon.pixel_matrix(4)
    assert pixels.shape == (4, 4)
    assert np.allclose(pixels, pixels.T)
    assert math.isclose(pixels[0, 0], 1 - 0.8 * 0.125**2)


def test_invalid_breakpoints():
    with pytest.raises(NumericalContractException):
        ConstantGraphon(p=0.5, breakpoints=(0.0, 0.6, 0.4, 1.0))
    with pytest.raises(NumericalContractException):
        ConstantGraphon(p=0.5, breakpoints=(0.1, 1.0))
