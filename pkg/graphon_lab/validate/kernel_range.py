from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from .base import GraphonValidationBase, ValidationException

if TYPE_CHECKING:
    from ..graphons.base import Graphon


async def async_setup_validator(graphon: Graphon) -> Validator:
    """Set up this validator."""
    return Validator(graphon=graphon)


class Validator(GraphonValidationBase):
    """0 <= W <= 1, breakpoints included."""

    async def async_validate(self) -> None:
        """Validate the graphon."""
        points = np.union1d(self.grid, self.graphon.breakpoints)
        values = self.graphon.kernel(points[:, None], points[None, :])
        if not np.all(np.isfinite(values)):
            raise ValidationException("The kernel returned non-finite values")
        if values.min() < 0.0 or values.max() > 1.0:
            raise ValidationException(
                f"The kernel leaves [0, 1] (range [{values.min():.4f}, {values.max():.4f}])"
            )
