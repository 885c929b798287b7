"""Validation of command configuration."""

# pylint: disable=W0212, W0511

from __future__ import annotations

import logging
import os
from typing import TYPE_CHECKING, Any, TypedDict

import voluptuous as vol

from .const import (
    COMMAND_CLASSIFY,
    COMMAND_COUNT,
    COMMAND_ENUMERATE,
    COMMAND_FIBER,
    COMMAND_GRASSMANN,
    COMMAND_HASSE,
    COMMAND_REPORT,
    COMMAND_VERIFY,
    CONF_BOUND,
    CONF_COMMAND,
    CONF_DOT,
    CONF_FORMAT,
    CONF_LAMBDA,
    CONF_MATRIX,
    CONF_MU,
    CONF_OMEGA,
    CONF_OUTPUT,
    CONF_P,
    CONF_Q,
    CONF_R,
    CONF_RANDOM_SAMPLES,
    CONF_SEED,
    CONF_TRIALS,
    CONF_VERBOSE,
    DEFAULT_BOUND,
    DEFAULT_RANDOM_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ENV_BOUND,
    ENV_TRIALS,
    FORMAT_DOT,
    FORMAT_JSON,
    FORMAT_TEXT,
)

if TYPE_CHECKING:
    from collections.abc import Mapping

_LOGGER = logging.getLogger(__name__)


class CommandConfig(TypedDict, total=False):
    """Validated options of one command invocation."""

    command: str
    p: int
    q: int
    r: int | None
    omega: str
    lam: list[int]
    mu: list[int]
    matrix: str
    seed: int
    bound: int
    trials: int
    random_samples: int
    format: str
    output: str | None
    dot: bool
    verbose: bool


def _partition(value: Any) -> list[int]:  # noqa: ANN401
    parts = [int(part) for part in value]
    if any(part < 1 for part in parts):
        msg = "partition parts must be positive"
        raise vol.Invalid(msg)
    if parts != sorted(parts, reverse=True):
        msg = "partition parts must be weakly decreasing"
        raise vol.Invalid(msg)
    return parts


SIZE = vol.All(vol.Coerce(int), vol.Range(min=0))
POSITIVE = vol.All(vol.Coerce(int), vol.Range(min=1))
PARTITION = vol.All(list, _partition)

COMMON_SCHEMA = {
    vol.Required(CONF_COMMAND): vol.In(
        [
            COMMAND_ENUMERATE,
            COMMAND_REPORT,
            COMMAND_HASSE,
            COMMAND_FIBER,
            COMMAND_COUNT,
            COMMAND_CLASSIFY,
            COMMAND_VERIFY,
            COMMAND_GRASSMANN,
        ]
    ),
    vol.Optional(CONF_FORMAT, default=FORMAT_TEXT): vol.In([FORMAT_TEXT, FORMAT_JSON, FORMAT_DOT]),
    vol.Optional(CONF_OUTPUT, default=None): vol.Any(None, str),
    vol.Optional(CONF_VERBOSE, default=False): bool,
}

SIZES_SCHEMA = {
    vol.Required(CONF_P): SIZE,
    vol.Required(CONF_Q): SIZE,
    vol.Required(CONF_R): SIZE,
}

SAMPLING_SCHEMA = {
    vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.Coerce(int),
    vol.Optional(CONF_BOUND, default=DEFAULT_BOUND): POSITIVE,
    vol.Optional(CONF_TRIALS, default=DEFAULT_TRIALS): POSITIVE,
}

COMMAND_SCHEMAS: dict[str, vol.Schema] = {
    COMMAND_ENUMERATE: vol.Schema({**COMMON_SCHEMA, **SIZES_SCHEMA}),
    COMMAND_COUNT: vol.Schema({**COMMON_SCHEMA, **SIZES_SCHEMA}),
    COMMAND_GRASSMANN: vol.Schema({**COMMON_SCHEMA, **SIZES_SCHEMA}),
    COMMAND_HASSE: vol.Schema(
        {**COMMON_SCHEMA, **SIZES_SCHEMA, vol.Optional(CONF_DOT, default=False): bool}
    ),
    COMMAND_REPORT: vol.Schema(
        {**COMMON_SCHEMA, vol.Required(CONF_OMEGA): vol.All(str, vol.Length(min=1))}
    ),
    COMMAND_FIBER: vol.Schema(
        {
            **COMMON_SCHEMA,
            **SIZES_SCHEMA,
            vol.Required(CONF_LAMBDA): PARTITION,
            vol.Required(CONF_MU): PARTITION,
        }
    ),
    COMMAND_CLASSIFY: vol.Schema(
        {**COMMON_SCHEMA, vol.Required(CONF_MATRIX): vol.All(str, vol.Length(min=1))}
    ),
    COMMAND_VERIFY: vol.Schema(
        {
            **COMMON_SCHEMA,
            vol.Required(CONF_P): SIZE,
            vol.Required(CONF_Q): SIZE,
            vol.Optional(CONF_R, default=None): vol.Any(None, SIZE),
            vol.Optional(CONF_RANDOM_SAMPLES, default=DEFAULT_RANDOM_SAMPLES): SIZE,
            **SAMPLING_SCHEMA,
        }
    ),
}

ENV_SCHEMA = vol.Schema(
    {
        vol.Optional(ENV_BOUND): POSITIVE,
        vol.Optional(ENV_TRIALS): POSITIVE,
    },
    extra=vol.REMOVE_EXTRA,
)


def environment_defaults(environ: Mapping[str, str] | None = None) -> dict[str, int]:
    """Read sampling defaults from the environment.

    Raises:
        vol.Invalid: if a variable is set to something other than a positive integer.

    """
    values = ENV_SCHEMA(dict(os.environ if environ is None else environ))
    defaults = {}
    if ENV_BOUND in values:
        defaults[CONF_BOUND] = values[ENV_BOUND]
    if ENV_TRIALS in values:
        defaults[CONF_TRIALS] = values[ENV_TRIALS]
    if defaults:
        _LOGGER.debug("Sampling defaults from environment: %s", defaults)
    return defaults


def build_config(
    options: Mapping[str, Any],
    environ: Mapping[str, str] | None = None,
) -> CommandConfig:
    """Merge environment defaults with explicit options and validate them.

    Options set to None are treated as absent, so flags override the
    environment which overrides the built-in defaults.

    Raises:
        vol.Invalid: if an option is missing, malformed or inconsistent.

    """
    command = options.get(CONF_COMMAND)
    if command not in COMMAND_SCHEMAS:
        msg = f"Unknown command {command!r}"
        raise vol.Invalid(msg, path=[CONF_COMMAND])
    schema = COMMAND_SCHEMAS[command]
    allowed = {str(key) for key in schema.schema}
    merged: dict[str, Any] = {}
    if command == COMMAND_VERIFY:
        merged.update(environment_defaults(environ))
    merged.update(
        {key: value for key, value in options.items() if value is not None and key in allowed}
    )
    config = schema(merged)

    if CONF_R in config and config[CONF_R] is not None and config[CONF_R] > config[CONF_P] + config[CONF_Q]:
        msg = f"r={config[CONF_R]} exceeds p+q={config[CONF_P] + config[CONF_Q]}"
        raise vol.Invalid(msg, path=[CONF_R])
    if command == COMMAND_FIBER:
        if sum(config[CONF_LAMBDA]) != config[CONF_P] or sum(config[CONF_MU]) != config[CONF_Q]:
            msg = "lambda and mu must partition p and q"
            raise vol.Invalid(msg, path=[CONF_LAMBDA])
        config["lam"] = config.pop(CONF_LAMBDA)
    if config[CONF_FORMAT] == FORMAT_DOT and command != COMMAND_HASSE:
        msg = "dot output is only available for hasse"
        raise vol.Invalid(msg, path=[CONF_FORMAT])
    if command == COMMAND_HASSE and config.get(CONF_DOT):
        config[CONF_FORMAT] = FORMAT_DOT
    return CommandConfig(**config)  # type: ignore[typeddict-item]
