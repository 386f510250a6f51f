"""
Settings for driven_qubit.
"""
import os

SECRET_KEY = 'a-not-to-be-trusted-secret-key'
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'driven_qubit',
]
USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        # stdout is reserved for machine-readable output.
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'standard',
        },
    },
    'loggers': {
        'driven_qubit': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

# Oracle integrator.
DRIVEN_QUBIT_ORACLE_STEP = 1e-3
DRIVEN_QUBIT_ORACLE_MAX_STEPS = 10_000_000

# Extremum search.
DRIVEN_QUBIT_SCAN_POINTS = 2048
DRIVEN_QUBIT_ROOT_TOL = 1e-10
DRIVEN_QUBIT_MAX_ITERATIONS = 200
DRIVEN_QUBIT_WINDOW_PERIODS = 3

# Sweeps.
DRIVEN_QUBIT_MAX_GRID_CELLS = 4_000_000

# Oracle verification.
DRIVEN_QUBIT_VERIFY_TOLERANCE = 1e-6

DRIVEN_QUBIT_OUTPUT_DIR = os.environ.get('DRIVEN_QUBIT_OUTPUT_DIR', os.getcwd())

DEFAULT_DRIVEN_QUBIT_SETTINGS = {
    'DRIVEN_QUBIT_ORACLE_STEP': DRIVEN_QUBIT_ORACLE_STEP,
    'DRIVEN_QUBIT_ORACLE_MAX_STEPS': DRIVEN_QUBIT_ORACLE_MAX_STEPS,
    'DRIVEN_QUBIT_SCAN_POINTS': DRIVEN_QUBIT_SCAN_POINTS,
    'DRIVEN_QUBIT_ROOT_TOL': DRIVEN_QUBIT_ROOT_TOL,
    'DRIVEN_QUBIT_MAX_ITERATIONS': DRIVEN_QUBIT_MAX_ITERATIONS,
    'DRIVEN_QUBIT_WINDOW_PERIODS': DRIVEN_QUBIT_WINDOW_PERIODS,
    'DRIVEN_QUBIT_MAX_GRID_CELLS': DRIVEN_QUBIT_MAX_GRID_CELLS,
    'DRIVEN_QUBIT_VERIFY_TOLERANCE': DRIVEN_QUBIT_VERIFY_TOLERANCE,
}


def plugin_settings(settings):
    """
    Defines driven_qubit settings when the app is installed in another Django project.
    Values already set by the host project are kept.
    """
    for name, value in DEFAULT_DRIVEN_QUBIT_SETTINGS.items():
        if not hasattr(settings, name):
            setattr(settings, name, value)

    settings.DRIVEN_QUBIT_OUTPUT_DIR = os.environ.get(
        'DRIVEN_QUBIT_OUTPUT_DIR',
        getattr(settings, 'DRIVEN_QUBIT_OUTPUT_DIR', os.getcwd()),
    )
