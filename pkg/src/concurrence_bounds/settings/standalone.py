"""
Settings for running the concurrence-bounds commands outside a Django project
"""

from concurrence_bounds.settings import common, production, sentry


class SettingsClass:
    """dummy settings class"""


SETTINGS = SettingsClass()
common.plugin_settings(SETTINGS)
production.plugin_settings(SETTINGS)
sentry.plugin_settings(SETTINGS)
vars().update(SETTINGS.__dict__)

INSTALLED_APPS = ["concurrence_bounds"]
DATABASES = {}
USE_TZ = True
