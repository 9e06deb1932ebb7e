"""JSON utils."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import orjson

from ..exceptions import GraphonManifestException

json_loads = orjson.loads


def json_dumps(data: Any) -> str:
    """Serialize data with sorted keys and indentation."""
    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode()


def load_json_file(path: str | Path) -> Any:
    """Load a JSON document from disk."""
    path = Path(path)
    try:
        return json_loads(path.read_bytes())
    except FileNotFoundError as exception:
        raise GraphonManifestException(f"File {path} does not exist") from exception
    except orjson.JSONDecodeError as exception:
        raise GraphonManifestException(f"File {path} is not valid JSON: {exception}") from exception


__all__ = ["json_dumps", "json_loads", "load_json_file"]
