"""
Optional Sentry reporting for concurrence-bounds
"""

from __future__ import annotations

import builtins
import importlib
import os
import re
from functools import partial
from typing import Any, Optional

import sentry_sdk

DEFAULT_IGNORED_EXCEPTION_CLASSES = ["concurrence_bounds.exceptions.InputError"]


def _load_exception_class(import_specifier: str) -> Optional[type]:
    """Load an exception class to be used for filtering Sentry events.

    :param import_specifier: A string containing the full import path for an exception
        class.  ex.  'ValueError' or 'concurrence_bounds.exceptions.InputError'
    :type import_specifier: str

    :returns: The exception type, or None when the name does not resolve
    """
    namespaced_class = import_specifier.rsplit(".", 1)
    if len(namespaced_class) == 1:
        return builtins.__dict__.get(namespaced_class[0])
    exception_module = importlib.import_module(namespaced_class[0])
    return exception_module.__dict__.get(namespaced_class[1])


def sentry_event_filter(
    event,
    hint,
    ignored_types: Optional[list[str]] = None,
    ignored_messages: Optional[list[str]] = None,
) -> Optional[dict[str, Any]]:
    """Avoid sending events to Sentry that match the specified types or regexes.

    Invalid user input (bad parameters, malformed state files) is reported to
    the user through the command's exit status and is ignored by default.

    :param event: Sentry event
    :param hint: Sentry event hint
    :param ignored_types: Full import paths of exception classes to drop,
        subclasses included
    :param ignored_messages: Regular expressions matched against the exception
        message

    :returns: The unedited event, or None when it should be filtered
    """
    exception_info = hint.get("exc_info")
    if exception_info:
        exception_class, exception_value, _ = exception_info
        for ignored_type in ignored_types or []:
            ignored_exception_class = _load_exception_class(ignored_type)
            if ignored_exception_class and issubclass(
                exception_class, ignored_exception_class
            ):
                return None
        for ignored_message in ignored_messages or []:
            if re.search(ignored_message, str(exception_value or "")):
                return None
    return event


def _load_env_tokens() -> dict[str, Any]:
    return {
        "SENTRY_DSN": os.environ.get("CONCURRENCE_BOUNDS_SENTRY_DSN", ""),
        "SENTRY_ENVIRONMENT": os.environ.get("CONCURRENCE_BOUNDS_SENTRY_ENVIRONMENT"),
        "SENTRY_IGNORED_EXCEPTION_CLASSES": DEFAULT_IGNORED_EXCEPTION_CLASSES,
        "SENTRY_IGNORED_EXCEPTION_MESSAGES": [],
    }


def plugin_settings(app_settings):
    """Initialise sentry-sdk when a DSN is configured"""
    env_tokens = _load_env_tokens()
    app_settings.SENTRY_ENABLED = False
    if sentry_dsn := env_tokens.get("SENTRY_DSN"):
        sentry_sdk.init(
            dsn=sentry_dsn,
            environment=env_tokens.get("SENTRY_ENVIRONMENT"),
            traces_sample_rate=0,
            before_send=partial(
                sentry_event_filter,
                ignored_types=env_tokens["SENTRY_IGNORED_EXCEPTION_CLASSES"],
                ignored_messages=env_tokens["SENTRY_IGNORED_EXCEPTION_MESSAGES"],
            ),
        )
        app_settings.SENTRY_ENABLED = True
