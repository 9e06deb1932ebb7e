"""Experiment plans."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import attr
import voluptuous as vol
from voluptuous.humanize import humanize_error

from ..base import LabConfiguration
from ..const import GRAPHON_PRESETS
from ..enums import Metric, SamplingMode
from ..exceptions import GraphonManifestException
from ..graphons import Graphon, graphon_from_manifest, load_graphon
from ..utils.json import load_json_file
from ..utils.validate import EXPERIMENT_PLAN_SCHEMA

PRESETS = GRAPHON_PRESETS


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class ExperimentPlan:
    """A sweep over N and trials for one graphon."""

    n_grid: tuple[int, ...] = attr.ib(converter=tuple)
    trials_per_n: int
    master_seed: int
    nu: float | None = None
    sampling_mode: SamplingMode = SamplingMode.RANDOM
    metrics: frozenset[Metric] = attr.ib(default=frozenset(), converter=frozenset)
    graphon_manifest: Path | None = None
    preset: str | None = None
    configuration: dict[str, Any] = attr.ib(factory=dict)

    @classmethod
    def from_dict(cls, data: dict[str, Any], base_path: Path | None = None) -> ExperimentPlan:
        """Validate a plan dict, manifest paths are resolved against base_path."""
        try:
            data = EXPERIMENT_PLAN_SCHEMA(data)
        except vol.Invalid as exception:
            raise GraphonManifestException(
                f"Invalid experiment plan: {humanize_error(data, exception)}"
            ) from exception
        manifest = data.get("graphon_manifest")
        if manifest is not None:
            manifest = Path(manifest)
            if not manifest.is_absolute() and base_path is not None:
                manifest = base_path / manifest
        return cls(
            n_grid=data["n_grid"],
            trials_per_n=data["trials_per_n"],
            master_seed=data["master_seed"],
            nu=data.get("nu"),
            sampling_mode=data["sampling_mode"],
            metrics=data["metrics"],
            graphon_manifest=manifest,
            preset=data.get("preset"),
            configuration=data["configuration"],
        )

    def lab_configuration(self) -> LabConfiguration:
        """Defaults updated with the plan's configuration block."""
        configuration = LabConfiguration()
        configuration.update_from_dict(self.configuration)
        return configuration

    def load_graphon(self) -> Graphon:
        """Load the graphon the plan refers to."""
        if self.preset is not None:
            return graphon_from_manifest(PRESETS[self.preset])
        if self.graphon_manifest is None:
            raise GraphonManifestException("The plan names no graphon")
        return load_graphon(self.graphon_manifest)

    @property
    def total_trials(self) -> int:
        """Number of (N, trial) pairs."""
        return len(self.n_grid) * self.trials_per_n


def load_plan(path: str | Path) -> ExperimentPlan:
    """Load and validate an experiment plan file."""
    path = Path(path)
    return ExperimentPlan.from_dict(load_json_file(path), base_path=path.parent)
