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
    """Neighbouring samples inside a block respect the declared lipschitz_L."""

    async def async_validate(self) -> None:
        """Validate the graphon."""
        graphon = self.graphon
        points = self.grid
        block = np.searchsorted(graphon.breakpoints, points, side="right")
        values = graphon.kernel(points[:, None], points[None, :])

        same_block = block[1:] == block[:-1]
        steps = np.abs(np.diff(values, axis=0))[same_block]
        spacing = np.diff(points)[same_block][:, None]
        if steps.size == 0:
            return
        slope = float(np.max(steps / spacing))
        if slope > graphon.lipschitz_L * (1 + 1e-9) + 1e-9:
            raise ValidationException(
                f"Observed slope {slope:.4f} exceeds lipschitz_L={graphon.lipschitz_L}"
            )
