"""Logging configuration."""

import logging


# Name the logger after the package; the CLI attaches the handlers.
logger = logging.getLogger(__package__)
logger.addHandler(logging.NullHandler())
