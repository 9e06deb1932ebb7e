"""Validation utilities."""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Any

import voluptuous as vol

from ..const import DEFAULT_N_GRID, DEFAULT_TRIALS, GRAPHON_PRESETS
from ..enums import GraphonFamily, Metric, SamplingMode


@dataclass
class Validate:
    """Validate."""

    errors: list[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        """Return bool if the validation was a success."""
        return len(self.errors) == 0


def _probability(value: Any) -> float:
    """Coerce to a float in [0, 1]."""
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise vol.Invalid(f"Value '{value}' is not in [0, 1].")
    return value


def _nu_validator(value: Any) -> float:
    """Failure probability, 0 < nu < 1/e."""
    value = float(value)
    if not 0.0 < value < math.exp(-1):
        raise vol.Invalid(f"Value '{value}' is not in (0, 1/e).", path=["nu"])
    return value


def _breakpoints_validator(values: list[float]) -> list[float]:
    """Custom breakpoints validator."""
    if len(values) < 2:
        raise vol.Invalid("At least the two endpoints are required.", path=["breakpoints"])
    if values[0] != 0.0 or values[-1] != 1.0:
        raise vol.Invalid("Breakpoints must start at 0 and end at 1.", path=["breakpoints"])
    if any(right <= left for left, right in zip(values[:-1], values[1:])):
        raise vol.Invalid("Breakpoints must be strictly increasing.", path=["breakpoints"])
    return values


def _square_matrix_validator(values: list[list[float]]) -> list[list[float]]:
    """Custom square matrix validator."""
    size = len(values)
    if size == 0 or any(len(row) != size for row in values):
        raise vol.Invalid("Value is not a non-empty square matrix.", path=["values"])
    return values


def _n_grid_validator(values: list[int]) -> list[int]:
    """Custom N grid validator."""
    if not values:
        raise vol.Invalid("The N grid is empty.", path=["n_grid"])
    if any(right <= left for left, right in zip(values[:-1], values[1:])):
        raise vol.Invalid("The N grid must be strictly increasing.", path=["n_grid"])
    return values


def _callable_path_validator(value: str) -> str:
    """Custom 'module:attribute' validator."""
    module, _, attribute = value.partition(":")
    if not module or not attribute:
        raise vol.Invalid(f"Value '{value}' is not of the form 'module:attribute'.")
    return value


FAMILY_PARAMS_SCHEMAS: dict[GraphonFamily, vol.Schema] = {
    GraphonFamily.CONSTANT: vol.Schema({vol.Required("p"): _probability}, extra=vol.PREVENT_EXTRA),
    GraphonFamily.BILINEAR: vol.Schema({vol.Required("a"): _probability}, extra=vol.PREVENT_EXTRA),
    GraphonFamily.BLOCK: vol.Schema(
        {vol.Required("values"): vol.All([[_probability]], _square_matrix_validator)},
        extra=vol.PREVENT_EXTRA,
    ),
    GraphonFamily.GRID: vol.Schema({vol.Required("path"): str}, extra=vol.PREVENT_EXTRA),
    GraphonFamily.CUSTOM: vol.Schema(
        {vol.Required("callable"): vol.All(str, _callable_path_validator)},
        extra=vol.PREVENT_EXTRA,
    ),
}

GRAPHON_MANIFEST_SCHEMA = vol.Schema(
    {
        vol.Required("family"): vol.Coerce(GraphonFamily),
        vol.Optional("name"): str,
        vol.Optional("params", default={}): dict,
        vol.Optional("breakpoints"): vol.All([vol.Coerce(float)], _breakpoints_validator),
        vol.Optional("lipschitz_L"): vol.All(vol.Coerce(float), vol.Range(min=0.0)),
        vol.Optional("K"): vol.All(int, vol.Range(min=0)),
        vol.Optional("eta_W"): _probability,
        vol.Optional("delta_W"): _probability,
        vol.Optional("nu"): _nu_validator,
    },
    extra=vol.PREVENT_EXTRA,
)

CONFIGURATION_SCHEMA = vol.Schema(
    {
        vol.Optional("degree_quadrature_order"): vol.All(int, vol.Range(min=2)),
        vol.Optional("step_quadrature_order"): vol.All(int, vol.Range(min=2)),
        vol.Optional("separation_tol"): vol.All(vol.Coerce(float), vol.Range(min=0.0)),
        vol.Optional("nystrom_resolution"): vol.All(int, vol.Range(min=64)),
        vol.Optional("operator_norm_resolution"): vol.All(int, vol.Range(min=16)),
        vol.Optional("operator_norm_cap"): vol.All(int, vol.Range(min=16)),
        vol.Optional("operator_norm_tol"): vol.All(vol.Coerce(float), vol.Range(min=0.0)),
        vol.Optional("extrema_grid_step"): vol.All(
            vol.Coerce(float), vol.Range(min=0.0, min_included=False)
        ),
        vol.Optional("operator_deviation_refinement"): vol.All(int, vol.Range(min=0)),
        vol.Optional("concurrent_tasks"): vol.All(int, vol.Range(min=1)),
    },
    extra=vol.PREVENT_EXTRA,
)


def _graphon_source_validator(data: dict[str, Any]) -> dict[str, Any]:
    """Exactly one of graphon_manifest and preset."""
    if ("graphon_manifest" in data) == ("preset" in data):
        raise vol.Invalid("Exactly one of [`graphon_manifest`, `preset`] is required")
    return data


EXPERIMENT_PLAN_SCHEMA = vol.All(
    vol.Schema(
        {
            vol.Optional("graphon_manifest"): str,
            vol.Optional("preset"): vol.In(sorted(GRAPHON_PRESETS)),
            vol.Optional("n_grid", default=list(DEFAULT_N_GRID)): vol.All(
                [vol.All(int, vol.Range(min=2))], _n_grid_validator
            ),
            vol.Optional("trials_per_n", default=DEFAULT_TRIALS): vol.All(int, vol.Range(min=1)),
            vol.Required("master_seed"): vol.All(int, vol.Range(min=0)),
            vol.Optional("nu"): _nu_validator,
            vol.Optional("sampling_mode", default=SamplingMode.RANDOM.value): vol.Coerce(
                SamplingMode
            ),
            vol.Optional("metrics", default=[]): [vol.Coerce(Metric)],
            vol.Optional("configuration", default={}): CONFIGURATION_SCHEMA,
        },
        extra=vol.PREVENT_EXTRA,
    ),
    _graphon_source_validator,
)
