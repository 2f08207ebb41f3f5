"""
Settings for concurrence-bounds tests
"""

from .common import plugin_settings as common_plugin_settings


class SettingsClass:
    """dummy settings class"""


def plugin_settings(settings):
    """
    Configure the package for tests: smaller validation runs and plain console
    logging
    """
    common_plugin_settings(settings)
    settings.CONCURRENCE_BOUNDS_CHECK_SAMPLES = 8
    settings.CONCURRENCE_BOUNDS_CHECK_DIMENSIONS = ((2, 2), (2, 3))
    settings.CONCURRENCE_BOUNDS_DECOMPOSITION_TRIALS = 20
    settings.CONCURRENCE_BOUNDS_SCALAR_LEMMA_POINTS = 500
    settings.CONCURRENCE_BOUNDS_SWEEP_MAX_WORKERS = 2
    settings.SENTRY_ENABLED = False


SETTINGS = SettingsClass()
plugin_settings(SETTINGS)
vars().update(SETTINGS.__dict__)

INSTALLED_APPS = ["concurrence_bounds"]
DATABASES = {}
USE_TZ = True
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"class": "logging.StreamHandler"}},
    "loggers": {"concurrence_bounds": {"handlers": ["console"], "level": "WARNING"}},
}
