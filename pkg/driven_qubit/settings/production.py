"""
Settings for driven_qubit when it runs inside a host Django project.
"""
from .common import *  # pylint: disable=wildcard-import, unused-wildcard-import  # noqa: F401
from .common import plugin_settings as common_plugin_settings


def plugin_settings(settings):  # pylint: disable=function-redefined
    """
    Applies the common defaults and quiets the package logger to warnings.
    """
    common_plugin_settings(settings)

    loggers = getattr(settings, 'LOGGING', {}).get('loggers', {})
    if 'driven_qubit' in loggers:
        loggers['driven_qubit']['level'] = 'WARNING'
