"""Seed derivation for reproducible sweeps."""

from __future__ import annotations

import hashlib

import attr
import numpy as np

from ..enums import StageTag


def derive_seed(master_seed: int, n: int, trial: int, stage: StageTag) -> int:
    """Derive a 64-bit seed from (master seed, N, trial, stage).

    The derivation only depends on its arguments, never on execution order.
    """
    digest = hashlib.blake2b(
        f"{master_seed}:{n}:{trial}:{stage}".encode(),
        digest_size=8,
        person=b"graphon_lab",
    ).digest()
    return int.from_bytes(digest, "big")


@attr.s(auto_attribs=True, frozen=True)
class SeedRecord:
    """Where the randomness of one sampling stage came from."""

    master_seed: int
    n: int
    trial: int
    stage: StageTag

    @property
    def seed(self) -> int:
        """Return the derived seed."""
        return derive_seed(self.master_seed, self.n, self.trial, self.stage)

    def generator(self) -> np.random.Generator:
        """Return a fresh generator for this stage."""
        return np.random.default_rng(self.seed)


def as_generator(seed: int | SeedRecord | np.random.Generator) -> np.random.Generator:
    """Normalize the accepted randomness states to a generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, SeedRecord):
        return seed.generator()
    return np.random.default_rng(seed)
