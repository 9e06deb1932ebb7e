"""Graphon base class."""

from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Any, ClassVar

import attr
import numpy as np

from ..const import DEFAULT_NU, EXTREMA_GRID_STEP
from ..enums import GraphonFamily
from ..exceptions import NumericalContractException


def _as_breakpoints(values: Any) -> tuple[float, ...]:
    if values is None:
        return (0.0, 1.0)
    return tuple(float(value) for value in values)


@attr.s(auto_attribs=True, frozen=True)
class ExtremaBrackets:
    """Brackets for eta_W = inf W, delta_W = inf d and sup d."""

    eta_low: float
    eta_high: float
    delta_low: float
    delta_high: float
    degree_max_low: float
    degree_max_high: float
    grid_step: float = 0.0
    exact: bool = False

    @property
    def eta(self) -> float:
        """Certified value of eta_W (lower bracket, never below 0)."""
        return max(self.eta_low, 0.0)

    @property
    def delta(self) -> float:
        """Certified value of delta_W (lower bracket, never below 0)."""
        return max(self.delta_low, 0.0)

    @property
    def degree_max(self) -> float:
        """Upper bracket of max d."""
        return min(self.degree_max_high, 1.0)

    def __iter__(self):
        yield from (self.eta_low, self.eta_high, self.delta_low, self.delta_high)

    @classmethod
    def exact_values(cls, eta: float, delta: float, degree_max: float) -> ExtremaBrackets:
        """Collapsed brackets for closed-form extrema."""
        return cls(eta, eta, delta, delta, degree_max, degree_max, exact=True)


@attr.s(auto_attribs=True, frozen=True, kw_only=True, eq=False)
class Graphon:
    """A symmetric measurable kernel W: [0,1]^2 -> [0,1].

    W is Lipschitz with constant lipschitz_L on every block I_k x I_l of the
    partition given by breakpoints, K is the number of interior breakpoints.
    nu is the failure probability the bounds use when the caller names none.
    """

    family: ClassVar[GraphonFamily]

    name: str = ""
    breakpoints: tuple[float, ...] = attr.ib(default=(0.0, 1.0), converter=_as_breakpoints)
    lipschitz_L: float | None = attr.ib(
        default=None, converter=attr.converters.optional(float)
    )
    eta_override: float | None = None
    delta_override: float | None = None
    nu: float | None = None
    extrema_grid_step: float = EXTREMA_GRID_STEP

    def __attrs_post_init__(self) -> None:
        if self.lipschitz_L is None:
            object.__setattr__(self, "lipschitz_L", self.default_lipschitz())
        points = self.breakpoints
        if len(points) < 2 or points[0] != 0.0 or points[-1] != 1.0:
            raise NumericalContractException(f"Breakpoints {points} must start at 0 and end at 1")
        if any(right <= left for left, right in zip(points[:-1], points[1:])):
            raise NumericalContractException(f"Breakpoints {points} are not strictly increasing")
        if self.lipschitz_L < 0:
            raise NumericalContractException("lipschitz_L must be non-negative")
        if self.extrema_grid_step <= 0:
            raise NumericalContractException("extrema_grid_step must be positive")

    def default_lipschitz(self) -> float:
        """Lipschitz constant used when none is declared."""
        return 0.0

    @classmethod
    def from_params(
        cls, params: dict[str, Any], *, base_path: Path | None = None, **common: Any
    ) -> Graphon:
        """Create the graphon from validated manifest params."""
        raise NotImplementedError

    @property
    def K(self) -> int:  # noqa: N802
        """Number of interior breakpoints."""
        return len(self.breakpoints) - 2

    @property
    def block_widths(self) -> np.ndarray:
        """Widths of the blocks I_k."""
        return np.diff(self.breakpoints)

    @property
    def min_block_width(self) -> float:
        """Width of the narrowest block."""
        return float(self.block_widths.min())

    @property
    def quadrature_panels(self) -> tuple[float, ...]:
        """Panel edges on which the kernel is smooth in each variable."""
        return self.breakpoints

    @property
    def label(self) -> str:
        """Return a human readable label."""
        return self.name or str(self.family)

    def kernel(self, x: Any, y: Any) -> Any:
        """Evaluate W with numpy broadcasting, floats in, float out."""
        x_values = np.asarray(x, dtype=float)
        y_values = np.asarray(y, dtype=float)
        values = self._kernel(x_values, y_values)
        values = np.broadcast_to(values, np.broadcast_shapes(x_values.shape, y_values.shape))
        if values.ndim == 0:
            return float(values)
        return np.array(values, dtype=float)

    def _kernel(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def closed_form_degree(self, x: Any) -> Any | None:
        """Return the degree in closed form, None when unknown."""
        return None

    def exact_extrema(self) -> ExtremaBrackets | None:
        """Return closed-form extrema, None when unknown."""
        return None

    def pixel_matrix(self, resolution: int = 100) -> np.ndarray:
        """Kernel sampled on the midpoints of a resolution x resolution grid."""
        points = (np.arange(resolution) + 0.5) / resolution
        return self.kernel(points[:, None], points[None, :])

    @cached_property
    def extrema(self) -> ExtremaBrackets:
        """Extrema brackets, exact when known, certified estimate otherwise."""
        # pylint: disable=import-outside-toplevel
        from ..core import estimate_extrema

        if (brackets := self.exact_extrema()) is None:
            grid_step = min(self.extrema_grid_step, self.min_block_width / 2)
            brackets = estimate_extrema(self, grid_step)
        if self.eta_override is None and self.delta_override is None:
            return brackets
        return attr.evolve(
            brackets,
            eta_low=brackets.eta_low if self.eta_override is None else self.eta_override,
            eta_high=brackets.eta_high if self.eta_override is None else self.eta_override,
            delta_low=brackets.delta_low if self.delta_override is None else self.delta_override,
            delta_high=brackets.delta_high
            if self.delta_override is None
            else self.delta_override,
        )

    @property
    def eta_W(self) -> float:  # noqa: N802
        """Infimum of the kernel."""
        return self.extrema.eta

    @property
    def delta_W(self) -> float:  # noqa: N802
        """Infimum of the degree function."""
        return self.extrema.delta

    @property
    def degree_max(self) -> float:
        """Maximum of the degree function."""
        return self.extrema.degree_max

    def resolve_nu(self, nu: float | None = None) -> float:
        """Failure probability for the bounds: nu, else the manifest value, else the default."""
        if nu is not None:
            return nu
        return DEFAULT_NU if self.nu is None else self.nu
