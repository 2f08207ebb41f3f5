"""
Logging settings for concurrence-bounds, read from the environment
"""

from __future__ import annotations

import os
from typing import Any

MEGABYTE = 1024 * 1024


def _load_env_tokens(default_settings: dict[str, Any]) -> dict[str, Any]:
    configured_tokens = {
        key: os.environ[key] for key in default_settings if key in os.environ
    }
    default_settings.update(configured_tokens)
    return default_settings


def plugin_settings(settings):
    """JSON logging to stderr, plus a rotating file when a path is configured"""
    env_tokens = _load_env_tokens(
        {
            "CONCURRENCE_BOUNDS_LOG_LEVEL": "WARNING",
            "CONCURRENCE_BOUNDS_LOG_FILE_PATH": "",
            "CONCURRENCE_BOUNDS_LOG_FILE_MAX_MEGABYTES": 10,
        }
    )
    log_level = env_tokens["CONCURRENCE_BOUNDS_LOG_LEVEL"]

    handlers = {
        "console": {
            "level": log_level,
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "json_format",
        },
    }
    if log_file_path := env_tokens["CONCURRENCE_BOUNDS_LOG_FILE_PATH"]:
        handlers["file"] = {
            "level": log_level,
            "class": "logging.handlers.RotatingFileHandler",
            "filename": log_file_path,
            "formatter": "json_format",
            "backupCount": 3,
            "mode": "a",
            "maxBytes": MEGABYTE
            * int(env_tokens["CONCURRENCE_BOUNDS_LOG_FILE_MAX_MEGABYTES"]),
        }

    settings.LOGGING = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "json_format": {
                "()": "pythonjsonlogger.jsonlogger.JsonFormatter",
                "timestamp": True,
                "reserved_attrs": [],  # Add all log attributes to JSON object
            },
        },
        "handlers": handlers,
        "loggers": {
            "": {
                "handlers": list(handlers),
                "level": log_level,
                "propagate": False,
            },
        },
    }
