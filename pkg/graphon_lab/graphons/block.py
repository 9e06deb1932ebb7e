"""Block (stochastic block model) graphons."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..const import SYMMETRY_TOL
from ..enums import GraphonFamily
from ..exceptions import NumericalContractException
from .base import ExtremaBrackets, Graphon


def _as_matrix(values: Any) -> np.ndarray:
    matrix = np.array(values, dtype=float)
    matrix.flags.writeable = False
    return matrix


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class BlockGraphon(Graphon):
    """W = values[k, l] on I_k x I_l, I_k = [breakpoints[k], breakpoints[k + 1])."""

    family = GraphonFamily.BLOCK

    values: np.ndarray = attr.ib(converter=_as_matrix)

    def __attrs_post_init__(self) -> None:
        super().__attrs_post_init__()
        size = self.values.shape[0]
        if self.values.ndim != 2 or self.values.shape != (size, size):
            raise NumericalContractException("Block values must be a square matrix")
        if len(self.breakpoints) != size + 1:
            raise NumericalContractException(
                f"{size} blocks need {size + 1} breakpoints, got {len(self.breakpoints)}"
            )
        if np.max(np.abs(self.values - self.values.T)) > SYMMETRY_TOL:
            raise NumericalContractException("Block values are not symmetric")
        if self.values.min() < 0.0 or self.values.max() > 1.0:
            raise NumericalContractException("Block values are not in [0, 1]")

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> BlockGraphon:
        size = len(params["values"])
        if common.get("breakpoints") is None:
            common["breakpoints"] = np.linspace(0.0, 1.0, size + 1)
        return cls(values=params["values"], **common)

    @classmethod
    def equal_blocks(cls, values: Any, **kwargs: Any) -> BlockGraphon:
        """Create with blocks of equal width."""
        size = len(values)
        return cls(values=values, breakpoints=np.linspace(0.0, 1.0, size + 1), **kwargs)

    def block_index(self, x: np.ndarray) -> np.ndarray:
        """Index k of the block I_k holding x, x = 1 belongs to the last block."""
        index = np.searchsorted(self.breakpoints, x, side="right") - 1
        return np.clip(index, 0, self.values.shape[0] - 1)

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.values[self.block_index(x), self.block_index(y)]

    @property
    def block_degrees(self) -> np.ndarray:
        """Degree value on each block."""
        return self.values @ self.block_widths

    def closed_form_degree(self, x: Any) -> Any:
        values = self.block_degrees[self.block_index(np.asarray(x, dtype=float))]
        return float(values) if np.ndim(values) == 0 else values

    def exact_extrema(self) -> ExtremaBrackets:
        degrees = self.block_degrees
        return ExtremaBrackets.exact_values(
            float(self.values.min()), float(degrees.min()), float(degrees.max())
        )
