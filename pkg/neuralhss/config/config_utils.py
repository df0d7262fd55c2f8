# ruff: noqa: TID252
"""Load, validate and dump experiment configuration."""

import json
import logging
from pathlib import Path
from typing import Any

import voluptuous as vol

from ..const import COMMAND_LIST, CONF_OUT, CONF_SEED, CONF_THREADS
from ..exceptions.validation_exception import ValidationExceptionError
from .config_schema import COMMAND_SCHEMAS, GLOBAL_SCHEMA

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

CONFIG_BASE = "config"
GLOBAL_KEYS = [CONF_SEED, CONF_OUT, CONF_THREADS]


# ----------------------------------------------------------------------------
def _error_key(err: vol.Invalid) -> str:
    """Dotted path of the offending key, or the section itself."""
    return ".".join(str(part) for part in err.path) or CONFIG_BASE


# ----------------------------------------------------------------------------
def validate_section(schema: vol.Schema, data: Any, base: str) -> dict[str, Any]:
    """Validate one section, mapping voluptuous errors to ValidationExceptionError."""

    try:
        return schema(data if data is not None else {})
    except vol.Invalid as err:
        _LOGGER.error("%s: invalid configuration: %s", base, err)
        raise ValidationExceptionError(base, _error_key(err)) from err


# ----------------------------------------------------------------------------
def load_config(path: str | Path | None) -> dict[str, Any]:
    """Read the raw JSON document; no path means an empty configuration."""

    if path is None:
        return {}

    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as err:
        raise ValidationExceptionError(CONFIG_BASE, "file") from err
    except json.JSONDecodeError as err:
        _LOGGER.error("load_config: %s is not valid JSON: %s", path, err)
        raise ValidationExceptionError(CONFIG_BASE, "json") from err

    if not isinstance(raw, dict):
        raise ValidationExceptionError(CONFIG_BASE, "document")

    for key in raw:
        if key not in GLOBAL_KEYS and key not in COMMAND_LIST:
            raise ValidationExceptionError(CONFIG_BASE, key)

    return raw


# ----------------------------------------------------------------------------
def resolve_config(
    raw: dict[str, Any], command: str, overrides: dict[str, Any] | None = None
) -> tuple[dict[str, Any], dict[str, Any]]:
    """Return (globals, section) for command, fully defaulted.

    Non-None overrides (command line flags) replace the global values read from
    the document.
    """

    if command not in COMMAND_SCHEMAS:
        raise ValidationExceptionError(CONFIG_BASE, command)

    global_data = {key: raw[key] for key in GLOBAL_KEYS if key in raw}
    for key, value in (overrides or {}).items():
        if value is not None:
            global_data[key] = value

    global_config = validate_section(vol.Schema(GLOBAL_SCHEMA), global_data, CONFIG_BASE)
    section = validate_section(COMMAND_SCHEMAS[command], raw.get(command), command)

    _LOGGER.debug("resolve_config: %s globals=%s section=%s", command, global_config, section)
    return global_config, section


# ----------------------------------------------------------------------------
def dump_config(raw: dict[str, Any], command: str, overrides: dict[str, Any] | None = None) -> str:
    """Fully defaulted configuration for command as indented JSON."""

    global_config, section = resolve_config(raw, command, overrides)
    return json.dumps({**global_config, command: section}, indent=4, sort_keys=True)


# ----------------------------------------------------------------------------
def config_fingerprint(global_config: dict[str, Any], section: dict[str, Any]) -> str:
    """Stable text identifying a resolved configuration."""
    return json.dumps({"globals": global_config, "section": section}, sort_keys=True)
