"""Custom logger for graphon_lab."""

import logging

from ..const import PACKAGE_NAME

LOGGER: logging.Logger = logging.getLogger(PACKAGE_NAME)
