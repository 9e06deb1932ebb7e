"""Graphons interpolated from a matrix of node values."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..const import SYMMETRY_TOL
from ..core import degree
from ..enums import GraphonFamily
from ..exceptions import GraphonManifestException, NumericalContractException
from ..utils.csv_io import read_matrix
from .base import ExtremaBrackets, Graphon


def _as_matrix(values: Any) -> np.ndarray:
    matrix = np.array(values, dtype=float)
    matrix.flags.writeable = False
    return matrix


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class GridGraphon(Graphon):
    """Bilinear interpolation of values given at the nodes (i/(m-1), j/(m-1))."""

    family = GraphonFamily.GRID

    values: np.ndarray = attr.ib(converter=_as_matrix)

    def __attrs_post_init__(self) -> None:
        size = self.values.shape[0]
        if self.values.ndim != 2 or self.values.shape != (size, size) or size < 2:
            raise NumericalContractException("Grid values must be a square matrix, at least 2x2")
        if np.max(np.abs(self.values - self.values.T)) > SYMMETRY_TOL:
            raise NumericalContractException("Grid values are not symmetric")
        if self.values.min() < 0.0 or self.values.max() > 1.0:
            raise NumericalContractException("Grid values are not in [0, 1]")
        super().__attrs_post_init__()

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> GridGraphon:
        path = Path(params["path"])
        if not path.is_absolute() and base_path is not None:
            path = base_path / path
        if not path.exists():
            raise GraphonManifestException(f"Grid file {path} does not exist")
        return cls(values=read_matrix(path), **common)

    @property
    def size(self) -> int:
        """Number of nodes per axis."""
        return self.values.shape[0]

    def default_lipschitz(self) -> float:
        steps = np.abs(np.diff(self.values, axis=0))
        return float(steps.max()) * (self.size - 1)

    @property
    def quadrature_panels(self) -> tuple[float, ...]:
        return tuple(np.union1d(np.linspace(0.0, 1.0, self.size), self.breakpoints))

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(x, y)
        scale = self.size - 1
        tx = x * scale
        ty = y * scale
        i = np.clip(np.floor(tx).astype(int), 0, self.size - 2)
        j = np.clip(np.floor(ty).astype(int), 0, self.size - 2)
        fx = tx - i
        fy = ty - j
        v = self.values
        return (
            (1 - fx) * (1 - fy) * v[i, j]
            + fx * (1 - fy) * v[i + 1, j]
            + (1 - fx) * fy * v[i, j + 1]
            + fx * fy * v[i + 1, j + 1]
        )

    def exact_extrema(self) -> ExtremaBrackets:
        # Kernel and degree are piecewise linear between nodes along each axis.
        nodes = np.linspace(0.0, 1.0, self.size)
        degrees = degree(self, nodes)
        return ExtremaBrackets.exact_values(
            float(self.values.min()), float(degrees.min()), float(degrees.max())
        )
