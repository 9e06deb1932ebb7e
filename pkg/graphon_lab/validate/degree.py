from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from ..core import degree
from .base import GraphonValidationBase, ValidationException

if TYPE_CHECKING:
    from ..graphons.base import Graphon


async def async_setup_validator(graphon: Graphon) -> Validator | None:
    """Set up this validator."""
    if graphon.closed_form_degree(0.5) is None:
        return None
    return Validator(graphon=graphon)


class Validator(GraphonValidationBase):
    """Quadrature degree matches the closed form."""

    async def async_validate(self) -> None:
        """Validate the graphon."""
        grid = self.grid
        deviation = float(
            np.max(np.abs(degree(self.graphon, grid) - self.graphon.closed_form_degree(grid)))
        )
        if deviation > 1e-10:
            raise ValidationException(f"Quadrature degree is off by {deviation:.3e}")
