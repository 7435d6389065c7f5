import logging
import os
from typing import Dict, Optional

from exceptions import ConfigError

# Cached settings, filled on first lookup
_SETTINGS: Dict[str, str] = {}
_DOTENV_LOADED = False

DEFAULTS = {
    "CALC_LOG_LEVEL": "WARNING",
    "CALC_CANDIDATE_RADIUS": "4",
    "CALC_SO_IRREDUCIBLE": "true",
    "CALC_OUTPUT_DIR": "output",
    "CALC_SAMPLE_DIR": "sample_data",
}

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _load_dotenv_once():
    """Load a .env file the first time a setting is requested"""
    global _DOTENV_LOADED
    if _DOTENV_LOADED:
        return
    _DOTENV_LOADED = True
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        pass


def get_setting(key: str, override: Optional[str] = None) -> str:
    """Get a setting with lazy loading - an explicit override wins, then cache, .env, environment, default"""
    if override is not None:
        return str(override)

    if key in _SETTINGS:
        return _SETTINGS[key]

    _load_dotenv_once()
    value = os.getenv(key)
    if value is None or not value.strip():
        if key not in DEFAULTS:
            raise ConfigError(f"Unknown setting {key}")
        value = DEFAULTS[key]

    _SETTINGS[key] = value.strip()
    return _SETTINGS[key]


def reset_settings():
    """Forget cached values (tests change the environment between cases)"""
    _SETTINGS.clear()


def parse_bool(text: str, key: str = "value") -> bool:
    lowered = str(text).strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigError(f"{key}: expected a boolean, got {text!r}")


def get_log_level() -> int:
    name = get_setting("CALC_LOG_LEVEL").upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigError(f"CALC_LOG_LEVEL: unknown level {name!r}")
    return level


def get_candidate_radius() -> int:
    raw = get_setting("CALC_CANDIDATE_RADIUS")
    try:
        radius = int(raw)
    except ValueError:
        raise ConfigError(f"CALC_CANDIDATE_RADIUS: expected an integer, got {raw!r}")
    if radius < 1:
        raise ConfigError("CALC_CANDIDATE_RADIUS must be at least 1")
    return radius


def get_so_irreducible_default() -> bool:
    return parse_bool(get_setting("CALC_SO_IRREDUCIBLE"), "CALC_SO_IRREDUCIBLE")


def get_output_dir() -> str:
    return get_setting("CALC_OUTPUT_DIR")


def get_sample_dir() -> str:
    return get_setting("CALC_SAMPLE_DIR")


def ensure_dir(path: str) -> str:
    """Create a directory on demand (needed before export writes into it)"""
    os.makedirs(path, exist_ok=True)
    return path
