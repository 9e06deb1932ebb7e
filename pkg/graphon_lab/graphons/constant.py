"""Constant graphon W = p."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..enums import GraphonFamily
from ..exceptions import NumericalContractException
from .base import ExtremaBrackets, Graphon


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class ConstantGraphon(Graphon):
    """Erdos-Renyi graphon."""

    family = GraphonFamily.CONSTANT

    p: float = attr.ib(converter=float)

    def __attrs_post_init__(self) -> None:
        super().__attrs_post_init__()
        if not 0.0 <= self.p <= 1.0:
            raise NumericalContractException(f"p={self.p} is not in [0, 1]")

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> ConstantGraphon:
        return cls(p=params["p"], **common)

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.full(np.broadcast_shapes(x.shape, y.shape), self.p)

    def closed_form_degree(self, x: Any) -> Any:
        if np.ndim(x) == 0:
            return self.p
        return np.full(np.shape(x), self.p)

    def exact_extrema(self) -> ExtremaBrackets:
        return ExtremaBrackets.exact_values(self.p, self.p, self.p)
