"""User supplied kernels."""

from __future__ import annotations

from collections.abc import Callable
from importlib import import_module
from pathlib import Path
from typing import Any

import attr
import numpy as np

from ..enums import GraphonFamily
from ..exceptions import GraphonManifestException
from .base import Graphon


def load_callable(path: str) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Import 'package.module:attribute'."""
    module_name, _, attribute = path.partition(":")
    try:
        module = import_module(module_name)
    except ImportError as exception:
        raise GraphonManifestException(f"Could not import {module_name}: {exception}") from exception
    if not callable(function := getattr(module, attribute, None)):
        raise GraphonManifestException(f"{path} is not a callable")
    return function


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class CustomGraphon(Graphon):
    """Kernel from a vectorized callable f(x, y).

    The callable must be symmetric, broadcast over numpy arrays and map into
    [0, 1]. lipschitz_L and breakpoints are declared by the caller and checked
    by the validation suite.
    """

    family = GraphonFamily.CUSTOM

    function: Callable[[np.ndarray, np.ndarray], np.ndarray]

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> CustomGraphon:
        if common.get("lipschitz_L") is None:
            raise GraphonManifestException("Custom graphons must declare lipschitz_L")
        return cls(function=load_callable(params["callable"]), **common)

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.asarray(self.function(x, y), dtype=float)
