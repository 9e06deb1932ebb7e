"""Common helpers for the command line tools."""

from __future__ import annotations

import logging
import sys

import colorlog

from graphon_lab.const import PACKAGE_NAME
from graphon_lab.enums import ExitCode


def setup_logging(debug: bool = False) -> None:
    """Send the package logger to stderr with colors."""
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(
        colorlog.ColoredFormatter(
            "%(log_color)s%(levelname)-8s%(reset)s %(message)s",
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "red,bg_white",
            },
        )
    )
    logger = logging.getLogger(PACKAGE_NAME)
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if debug else logging.INFO)
    logger.propagate = False


def print_error_and_exit(err: str, code: ExitCode = ExitCode.USAGE) -> None:
    print(f"error: {err}", file=sys.stderr)
    sys.exit(code)
