from django.apps import AppConfig


class ConcurrenceBoundsConfig(AppConfig):
    """App config so the management commands are discovered"""

    name = "concurrence_bounds"
    verbose_name = "Concurrence lower bounds from Bloch correlation matrices"
