from __future__ import annotations

from typing import TYPE_CHECKING

from ..core import estimate_extrema
from .base import GraphonValidationBase, ValidationException

if TYPE_CHECKING:
    from ..graphons.base import Graphon

_TOLERANCE = 1e-9


async def async_setup_validator(graphon: Graphon) -> Validator | None:
    """Set up this validator."""
    if graphon.eta_override is None and graphon.delta_override is None:
        return None
    return Validator(graphon=graphon)


class Validator(GraphonValidationBase):
    """Declared eta_W and delta_W fall inside the certified brackets."""

    async def async_validate(self) -> None:
        """Validate the graphon."""
        graphon = self.graphon
        brackets = graphon.exact_extrema() or estimate_extrema(
            graphon, min(1e-3, graphon.min_block_width / 2)
        )
        checks = (
            ("eta_W", graphon.eta_override, brackets.eta_low, brackets.eta_high),
            ("delta_W", graphon.delta_override, brackets.delta_low, brackets.delta_high),
        )
        for name, declared, low, high in checks:
            if declared is None:
                continue
            if not low - _TOLERANCE <= declared <= high + _TOLERANCE:
                raise ValidationException(
                    f"Declared {name}={declared} is outside [{low:.6f}, {high:.6f}]"
                )
