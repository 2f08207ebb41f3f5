"""Tests for the settings modules"""

import pytest

from concurrence_bounds.exceptions import NotPSDError, StateFileError
from concurrence_bounds.settings import common, production, sentry

DEFAULT_IGNORED = sentry.DEFAULT_IGNORED_EXCEPTION_CLASSES


class SettingsClass:
    """dummy settings class"""


def test_common_defaults():
    settings = SettingsClass()
    common.plugin_settings(settings)
    assert settings.CONCURRENCE_BOUNDS_CHECK_SEED == 42
    assert settings.CONCURRENCE_BOUNDS_CHECK_SAMPLES == 200
    assert settings.CONCURRENCE_BOUNDS_CHECK_DIMENSIONS == (
        (2, 2),
        (2, 3),
        (3, 3),
        (4, 4),
    )
    assert settings.CONCURRENCE_BOUNDS_SWEEP_STEP == 0.005


def test_logging_defaults(monkeypatch):
    for token in (
        "CONCURRENCE_BOUNDS_LOG_LEVEL",
        "CONCURRENCE_BOUNDS_LOG_FILE_PATH",
        "CONCURRENCE_BOUNDS_LOG_FILE_MAX_MEGABYTES",
    ):
        monkeypatch.delenv(token, raising=False)
    settings = SettingsClass()
    production.plugin_settings(settings)
    assert set(settings.LOGGING["handlers"]) == {"console"}
    assert settings.LOGGING["loggers"][""]["level"] == "WARNING"
    assert (
        settings.LOGGING["formatters"]["json_format"]["()"]
        == "pythonjsonlogger.jsonlogger.JsonFormatter"
    )


def test_logging_file_handler_from_environment(monkeypatch, tmp_path):
    log_path = str(tmp_path / "bounds.log")
    monkeypatch.setenv("CONCURRENCE_BOUNDS_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("CONCURRENCE_BOUNDS_LOG_FILE_PATH", log_path)
    monkeypatch.setenv("CONCURRENCE_BOUNDS_LOG_FILE_MAX_MEGABYTES", "2")
    settings = SettingsClass()
    production.plugin_settings(settings)
    file_handler = settings.LOGGING["handlers"]["file"]
    assert file_handler["filename"] == log_path
    assert file_handler["maxBytes"] == 2 * production.MEGABYTE
    assert file_handler["level"] == "DEBUG"
    assert settings.LOGGING["loggers"][""]["handlers"] == ["console", "file"]


@pytest.mark.parametrize(
    "exception, ignored_types, ignored_messages, dropped",  # noqa: PT006
    [
        (StateFileError("bad file"), DEFAULT_IGNORED, [], True),
        (NotPSDError(-0.1, 1e-9), DEFAULT_IGNORED, [], True),
        (ValueError("boom"), DEFAULT_IGNORED, [], False),
        (ValueError("boom"), ["ValueError"], [], True),
        (RuntimeError("lapack failed"), [], ["^lapack"], True),
        (RuntimeError("other"), [], ["^lapack"], False),
    ],
)
def test_sentry_event_filter(exception, ignored_types, ignored_messages, dropped):
    event = {"event_id": "abc"}
    hint = {"exc_info": (type(exception), exception, None)}
    result = sentry.sentry_event_filter(
        event, hint, ignored_types=ignored_types, ignored_messages=ignored_messages
    )
    assert (result is None) == dropped


def test_sentry_event_filter_without_exception():
    assert sentry.sentry_event_filter({"message": "hi"}, {}) == {"message": "hi"}


def test_sentry_is_initialised_only_with_dsn(monkeypatch, mocker):
    mock_sdk = mocker.patch("concurrence_bounds.settings.sentry.sentry_sdk")
    monkeypatch.delenv("CONCURRENCE_BOUNDS_SENTRY_DSN", raising=False)
    settings = SettingsClass()
    sentry.plugin_settings(settings)
    assert settings.SENTRY_ENABLED is False
    mock_sdk.init.assert_not_called()

    monkeypatch.setenv("CONCURRENCE_BOUNDS_SENTRY_DSN", "https://key@sentry.example/1")
    sentry.plugin_settings(settings)
    assert settings.SENTRY_ENABLED is True
    assert mock_sdk.init.call_args.kwargs["dsn"] == "https://key@sentry.example/1"
