from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from ..const import SYMMETRY_TOL
from .base import GraphonValidationBase, ValidationException

if TYPE_CHECKING:
    from ..graphons.base import Graphon


async def async_setup_validator(graphon: Graphon) -> Validator:
    """Set up this validator."""
    return Validator(graphon=graphon)


class Validator(GraphonValidationBase):
    """W(x, y) = W(y, x)."""

    async def async_validate(self) -> None:
        """Validate the graphon."""
        grid = self.grid
        values = self.graphon.kernel(grid[:, None], grid[None, :])
        if (asymmetry := float(np.max(np.abs(values - values.T)))) > SYMMETRY_TOL:
            raise ValidationException(f"The kernel is not symmetric (max deviation {asymmetry:.3e})")
