"""
Settings for driven_qubit tests.
"""

from .common import *  # pylint: disable=wildcard-import, unused-wildcard-import  # noqa: F401

LOGGING['loggers']['driven_qubit']['level'] = 'WARNING'  # noqa: F405

DRIVEN_QUBIT_MAX_GRID_CELLS = 1_000_000
