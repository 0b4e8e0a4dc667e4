"""YAML configuration for the command line.

A config file sets defaults for the global flags. Precedence is an
explicit flag, then the file, then the constants in const.py.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import voluptuous as vol
import yaml

from .const import (
    CONF_BUDGET,
    CONF_FORMAT,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_THREADS,
    DEFAULT_BUDGET,
    DEFAULT_FORMAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    FORMATS,
)
from .core.errors import FormatError

logger = logging.getLogger(__name__)

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_SEED, default=DEFAULT_SEED): vol.All(vol.Coerce(int), vol.Range(min=0)),
        vol.Optional(CONF_THREADS, default=DEFAULT_THREADS): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=256)
        ),
        vol.Optional(CONF_BUDGET, default=DEFAULT_BUDGET): vol.All(
            vol.Coerce(float), vol.Range(min=0, min_included=False)
        ),
        vol.Optional(CONF_FORMAT, default=DEFAULT_FORMAT): vol.In(FORMATS),
        vol.Optional(CONF_SAMPLES, default=DEFAULT_SAMPLES): vol.All(vol.Coerce(int), vol.Range(min=1)),
    },
    extra=vol.PREVENT_EXTRA,
)


def default_config() -> dict[str, Any]:
    return CONFIG_SCHEMA({})


def load_config(path: str | Path | None) -> dict[str, Any]:
    """Load and validate a config file; None gives the defaults.

    Raises:
        OSError: The file cannot be read.
        FormatError: The file is not a YAML mapping.
        voluptuous.Invalid: A key is unknown or a value out of range.
    """
    if path is None:
        return default_config()
    raw = yaml.safe_load(Path(path).read_text())
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise FormatError(f"{path}: config must be a mapping, got {type(raw).__name__}")
    config = CONFIG_SCHEMA(raw)
    logger.debug("Loaded config from %s: %s", path, config)
    return config


def merge(config: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    """Apply explicit flag values (None means not given) over a loaded config."""
    merged = dict(config)
    merged.update({key: value for key, value in overrides.items() if value is not None})
    return CONFIG_SCHEMA(merged)
