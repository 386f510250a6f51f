"""This file contains all the tests for the settings helpers.

Classes:
    PluginSettingsTestCase: Tests cases for plugin_settings.
"""
import os
import unittest
from types import SimpleNamespace

from mock import patch

from driven_qubit.settings import common, production


class PluginSettingsTestCase(unittest.TestCase):
    """Test class for plugin_settings."""

    def test_defaults_applied(self):
        """ Test a host project without driven_qubit settings.

        Expected behavior:
            - Every default is set.
        """
        settings = SimpleNamespace()

        common.plugin_settings(settings)

        for name, value in common.DEFAULT_DRIVEN_QUBIT_SETTINGS.items():
            self.assertEqual(value, getattr(settings, name))

    def test_host_values_kept(self):
        """ Test a host project that already tunes the search.

        Expected behavior:
            - The host value is kept.
        """
        settings = SimpleNamespace(DRIVEN_QUBIT_SCAN_POINTS=512)

        common.plugin_settings(settings)

        self.assertEqual(512, settings.DRIVEN_QUBIT_SCAN_POINTS)

    @patch.dict(os.environ, {"DRIVEN_QUBIT_OUTPUT_DIR": "/var/qubit"})
    def test_output_dir_from_environment(self):
        """ Test the output directory environment variable.

        Expected behavior:
            - It wins over the host value.
        """
        settings = SimpleNamespace(DRIVEN_QUBIT_OUTPUT_DIR="/srv/out")

        common.plugin_settings(settings)

        self.assertEqual("/var/qubit", settings.DRIVEN_QUBIT_OUTPUT_DIR)

    def test_production_logging(self):
        """ Test the production settings.

        Expected behavior:
            - The package logger is lowered to WARNING.
        """
        settings = SimpleNamespace(LOGGING={"loggers": {"driven_qubit": {"level": "DEBUG"}}})

        production.plugin_settings(settings)

        self.assertEqual("WARNING", settings.LOGGING["loggers"]["driven_qubit"]["level"])
