"""
App configuration for driven_qubit.
"""

from django.apps import AppConfig


class DrivenQubitConfig(AppConfig):
    """
    Nonclassicality of a linearly driven, dephasing qubit configuration.
    """
    name = 'driven_qubit'
    verbose_name = 'Driven qubit nonclassicality toolkit.'
