"""Orbits of GL_p x GL_q on Gr(p+q, r) x Fl(p) x Fl(q) and their Steinberg maps."""

# pylint: disable=W0212, W0511

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from loguru import logger

from .const import DOMAIN

if TYPE_CHECKING:
    from loguru import Message, Record

_LOGGER = logging.getLogger(DOMAIN)

# loguru levels below DEBUG and between INFO and WARNING, named for stdlib output
TRACE = 5
SUCCESS = 25
logging.addLevelName(TRACE, "TRACE")
logging.addLevelName(SUCCESS, "SUCCESS")


def _enabled(record: Record) -> bool:
    """Drop a loguru record unless the package logger would emit its level."""
    return _LOGGER.isEnabledFor(record["level"].no)


def loguru_to_logging(message: Message) -> None:
    """Forward a Loguru record to the package logger at the same numeric level.

    Whether it is emitted depends on the stdlib level of the package logger,
    which the command line sets from ``--verbose``.
    """
    record = message.record
    _LOGGER.log(record["level"].no, "%s: %s", record["name"], record["message"])


logger.remove()
logger.configure(handlers=[{"sink": loguru_to_logging, "level": 0, "filter": _enabled}])

# These imports must be after Loguru configuration to properly intercept logging
from .grs import GrsTuple, grs, grs_inverse  # noqa: E402
from .orbit import OrbitGraph, enumerate_parameters, parse_omega  # noqa: E402
from .steinberg import phi_k, phi_s  # noqa: E402

__all__ = [
    "GrsTuple",
    "OrbitGraph",
    "enumerate_parameters",
    "grs",
    "grs_inverse",
    "parse_omega",
    "phi_k",
    "phi_s",
]
