"""Initialize graphons."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import voluptuous as vol
from voluptuous.humanize import humanize_error

from ..enums import GraphonFamily
from ..exceptions import GraphonManifestException, NumericalContractException
from ..utils.json import load_json_file
from ..utils.validate import FAMILY_PARAMS_SCHEMAS, GRAPHON_MANIFEST_SCHEMA
from .base import ExtremaBrackets, Graphon
from .bilinear import BilinearGraphon
from .block import BlockGraphon
from .constant import ConstantGraphon
from .custom import CustomGraphon
from .grid import GridGraphon

GRAPHON_CLASSES: dict[GraphonFamily, type[Graphon]] = {
    GraphonFamily.BILINEAR: BilinearGraphon,
    GraphonFamily.BLOCK: BlockGraphon,
    GraphonFamily.CONSTANT: ConstantGraphon,
    GraphonFamily.CUSTOM: CustomGraphon,
    GraphonFamily.GRID: GridGraphon,
}


def graphon_from_manifest(manifest: dict[str, Any], base_path: Path | None = None) -> Graphon:
    """Create a graphon from a manifest dict."""
    try:
        data = GRAPHON_MANIFEST_SCHEMA(manifest)
        params = FAMILY_PARAMS_SCHEMAS[data["family"]](data["params"])
    except vol.Invalid as exception:
        raise GraphonManifestException(
            f"Invalid graphon manifest: {humanize_error(manifest, exception)}"
        ) from exception

    graphon_class = GRAPHON_CLASSES[data["family"]]
    try:
        graphon = graphon_class.from_params(
            params,
            base_path=base_path,
            name=data.get("name", ""),
            breakpoints=data.get("breakpoints"),
            lipschitz_L=data.get("lipschitz_L"),
            eta_override=data.get("eta_W"),
            delta_override=data.get("delta_W"),
            nu=data.get("nu"),
        )
    except NumericalContractException as exception:
        raise GraphonManifestException(f"Invalid graphon manifest: {exception}") from exception

    if (declared := data.get("K")) is not None and declared != graphon.K:
        raise GraphonManifestException(
            f"K={declared} does not match {graphon.K} interior breakpoints"
        )
    return graphon


def load_graphon(path: str | Path) -> Graphon:
    """Load a graphon manifest file."""
    path = Path(path)
    return graphon_from_manifest(load_json_file(path), base_path=path.parent)


__all__ = [
    "GRAPHON_CLASSES",
    "BilinearGraphon",
    "BlockGraphon",
    "ConstantGraphon",
    "CustomGraphon",
    "ExtremaBrackets",
    "Graphon",
    "GridGraphon",
    "graphon_from_manifest",
    "load_graphon",
]
