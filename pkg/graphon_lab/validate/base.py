"""Base class for graphon checks."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

import numpy as np

from ..const import CHECK_GRID_RESOLUTION
from ..exceptions import GraphonLabException
from ..utils.logger import LOGGER

if TYPE_CHECKING:
    from ..enums import GraphonFamily
    from ..graphons.base import Graphon


class ValidationException(GraphonLabException):
    """Raise when there is a validation issue."""


class GraphonValidationBase:
    """Base class for graphon checks."""

    families: tuple[GraphonFamily, ...] = ()
    resolution: int = CHECK_GRID_RESOLUTION

    def __init__(self, graphon: Graphon) -> None:
        self.graphon = graphon
        self.failed = False
        self.message: str | None = None

    @property
    def slug(self) -> str:
        """Return the check slug."""
        return self.__class__.__module__.rsplit(".", maxsplit=1)[-1]

    @property
    def grid(self) -> np.ndarray:
        """Midpoint grid the checks sample on."""
        return (np.arange(self.resolution) + 0.5) / self.resolution

    async def async_validate(self) -> None:
        """Validate the graphon."""

    async def execute_validation(self, *_: Any, **__: Any) -> None:
        """Execute the task defined in subclass."""
        self.failed = False
        self.message = None

        try:
            await self.async_validate()
        except ValidationException as exception:
            self.failed = True
            self.message = str(exception)
            LOGGER.error("<Validation %s> failed: %s", self.slug, exception)

        else:
            LOGGER.debug("<Validation %s> completed", self.slug)
