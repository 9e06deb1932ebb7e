"""Set up some common test helper things."""

from collections.abc import Generator
import logging

import freezegun
import numpy as np
import pytest
from pytest_snapshot.plugin import Snapshot

from graphon_lab.graphons import BilinearGraphon, BlockGraphon, ConstantGraphon

# Set default logger
logging.basicConfig(level=logging.INFO)


@pytest.fixture
def time_freezer() -> Generator[freezegun.api.FrozenDateTimeFactory, None, None]:
    with freezegun.freeze_time("2019-02-26T15:02:39Z") as frozen_time:
        yield frozen_time


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixed random generator."""
    return np.random.default_rng(20240229)


@pytest.fixture
def bilinear_graphon() -> BilinearGraphon:
    """W(x, y) = 1 - 0.8 x y."""
    return BilinearGraphon(a=0.8, name="bilinear_decay")


@pytest.fixture
def constant_graphon() -> ConstantGraphon:
    """W = 0.5."""
    return ConstantGraphon(p=0.5, name="constant")


@pytest.fixture
def two_block_graphon() -> BlockGraphon:
    """Assortative two block graphon."""
    return BlockGraphon.equal_blocks([[0.9, 0.1], [0.1, 0.9]], name="two_block")


@pytest.fixture
def snapshots(snapshot: Snapshot) -> Snapshot:
    """Fixture for a snapshot."""
    snapshot.snapshot_dir = "tests/snapshots"
    return snapshot
