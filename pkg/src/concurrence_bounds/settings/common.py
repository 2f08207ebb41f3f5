"""
Settings for concurrence-bounds
"""


def plugin_settings(settings):
    """Apply default settings for the concurrence bounds commands"""
    settings.CONCURRENCE_BOUNDS_CHECK_SEED = 42
    settings.CONCURRENCE_BOUNDS_CHECK_SAMPLES = 200
    settings.CONCURRENCE_BOUNDS_CHECK_DIMENSIONS = ((2, 2), (2, 3), (3, 3), (4, 4))
    settings.CONCURRENCE_BOUNDS_DECOMPOSITION_TRIALS = 200
    settings.CONCURRENCE_BOUNDS_SWEEP_STEP = 0.005
    settings.CONCURRENCE_BOUNDS_SWEEP_MAX_WORKERS = 4
    settings.CONCURRENCE_BOUNDS_CROSSOVER_TOLERANCE = 1e-6
    settings.CONCURRENCE_BOUNDS_SCALAR_LEMMA_POINTS = 10000
