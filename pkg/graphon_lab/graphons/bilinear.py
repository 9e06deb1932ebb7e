"""Bilinear graphon W(x, y) = 1 - a x y."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..enums import GraphonFamily
from ..exceptions import NumericalContractException
from .base import ExtremaBrackets, Graphon


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class BilinearGraphon(Graphon):
    """W(x, y) = 1 - a x y, Lipschitz with constant a.

    d(x) = 1 - a x / 2, eta_W = 1 - a, delta_W = 1 - a / 2.
    """

    family = GraphonFamily.BILINEAR

    a: float = attr.ib(converter=float)

    def __attrs_post_init__(self) -> None:
        if not 0.0 <= self.a <= 1.0:
            raise NumericalContractException(f"a={self.a} is not in [0, 1]")
        super().__attrs_post_init__()

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> BilinearGraphon:
        return cls(a=params["a"], **common)

    def default_lipschitz(self) -> float:
        return self.a

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return 1.0 - self.a * x * y

    def closed_form_degree(self, x: Any) -> Any:
        values = 1.0 - self.a * np.asarray(x, dtype=float) / 2.0
        return float(values) if values.ndim == 0 else values

    def exact_extrema(self) -> ExtremaBrackets:
        return ExtremaBrackets.exact_values(1.0 - self.a, 1.0 - self.a / 2.0, 1.0)
