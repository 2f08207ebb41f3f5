"""
Lower bounds of concurrence and 2-concurrence from generalized Bloch
correlation matrices.
"""

__version__ = "0.1.0"

default_app_config = "concurrence_bounds.apps.ConcurrenceBoundsConfig"
