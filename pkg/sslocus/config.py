"""
Configuration settings for sslocus
"""

import logging
import os

from dotenv import find_dotenv, load_dotenv

from .errors import ConfigError

DEFAULTS = {
    "max_p": 7,
    "workers": 1,
    "log_level": "WARNING",
    "color": True,
}

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def load_config(overrides=None) -> dict:
    """Defaults, then .env / environment, then explicit overrides (None values are ignored)"""
    load_dotenv(find_dotenv(usecwd=True))

    config = dict(DEFAULTS)
    config["max_p"] = _int_env("SSLOCUS_MAX_P", DEFAULTS["max_p"], 3)
    config["workers"] = _int_env("SSLOCUS_WORKERS", DEFAULTS["workers"], 1)

    level = os.getenv("SSLOCUS_LOG_LEVEL", DEFAULTS["log_level"]).upper()
    if level not in _LEVELS:
        raise ConfigError(f"SSLOCUS_LOG_LEVEL must be one of {', '.join(_LEVELS)}, got {level!r}")
    config["log_level"] = level

    # https://no-color.org: any value disables colour
    if os.getenv("NO_COLOR") is not None:
        config["color"] = False

    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value
    return config


def log_level(config: dict) -> int:
    return getattr(logging, config.get("log_level", DEFAULTS["log_level"]))
