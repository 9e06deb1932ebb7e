"""graphon_lab validation manager."""

from __future__ import annotations

import asyncio
from importlib import import_module
from pathlib import Path
from typing import TYPE_CHECKING

from ..exceptions import GraphonValidationException
from ..utils.logger import LOGGER
from ..utils.validate import Validate

if TYPE_CHECKING:
    from ..graphons.base import Graphon
    from .base import GraphonValidationBase


class ValidationManager:
    """graphon_lab validation manager."""

    def __init__(self) -> None:
        """Initialize the validation manager class."""
        self._validators: dict[str, GraphonValidationBase] = {}

    @property
    def validators(self) -> list[GraphonValidationBase]:
        """Return all list of all checks."""
        return list(self._validators.values())

    async def async_load(self, graphon: Graphon) -> None:
        """Load all checks."""
        self._validators = {}
        validator_files = Path(__file__).parent
        validator_modules = (
            module.stem
            for module in validator_files.glob("*.py")
            if module.name not in ("base.py", "__init__.py", "manager.py")
        )

        async def _load_module(module: str) -> None:
            task_module = import_module(f"{__package__}.{module}")
            if task := await task_module.async_setup_validator(graphon=graphon):
                self._validators[task.slug] = task

        await asyncio.gather(*[_load_module(task) for task in validator_modules])

    async def async_run_graphon_checks(self, graphon: Graphon, strict: bool = True) -> Validate:
        """Run all checks for a graphon, raise on failure when strict."""
        await self.async_load(graphon)

        validators = [
            validator
            for validator in self.validators
            if not validator.families or graphon.family in validator.families
        ]
        await asyncio.gather(*[validator.execute_validation() for validator in validators])

        result = Validate(
            errors=sorted(
                f"{validator.slug}: {validator.message}" for validator in validators if validator.failed
            )
        )
        if not result.success:
            LOGGER.error(
                "<Validation> %s %s/%s checks failed",
                graphon.label,
                len(result.errors),
                len(validators),
            )
            if strict:
                raise GraphonValidationException("; ".join(result.errors))
        else:
            LOGGER.info("<Validation> %s All (%s) checks passed", graphon.label, len(validators))
        return result


def run_graphon_checks(graphon: Graphon, strict: bool = True) -> Validate:
    """Blocking wrapper around ValidationManager.async_run_graphon_checks."""
    return asyncio.run(ValidationManager().async_run_graphon_checks(graphon, strict))
