"""Base graphon_lab configuration."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Any

from .const import (
    DEFAULT_CONCURRENT_TASKS,
    DEGREE_QUADRATURE_ORDER,
    EXTREMA_GRID_STEP,
    NYSTROM_DEFAULT_RESOLUTION,
    OPERATOR_NORM_MIN_RESOLUTION,
    OPERATOR_NORM_RESOLUTION_CAP,
    OPERATOR_NORM_TOL,
    SEPARATION_TOL,
    STEP_QUADRATURE_ORDER,
)
from .exceptions import GraphonLabException
from .utils.json import json_dumps


@dataclass
class LabConfiguration:
    """LabConfiguration class."""

    degree_quadrature_order: int = DEGREE_QUADRATURE_ORDER
    step_quadrature_order: int = STEP_QUADRATURE_ORDER
    separation_tol: float = SEPARATION_TOL
    nystrom_resolution: int = NYSTROM_DEFAULT_RESOLUTION
    operator_norm_resolution: int = OPERATOR_NORM_MIN_RESOLUTION
    operator_norm_cap: int = OPERATOR_NORM_RESOLUTION_CAP
    operator_norm_tol: float = OPERATOR_NORM_TOL
    extrema_grid_step: float = EXTREMA_GRID_STEP
    operator_deviation_refinement: int = 0
    concurrent_tasks: int = DEFAULT_CONCURRENT_TASKS

    def to_json(self) -> str:
        """Return a json string."""
        return json_dumps(asdict(self))

    def update_from_dict(self, data: dict[str, Any]) -> None:
        """Set attributes from dicts."""
        if not isinstance(data, dict):
            raise GraphonLabException("Configuration is not valid.")

        known = {entry.name for entry in fields(self)}
        for key, value in data.items():
            if key not in known:
                raise GraphonLabException(f"Unknown configuration option '{key}'.")
            self.__setattr__(key, value)
