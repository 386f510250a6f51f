"""This file contains all the tests for the solver records.

Classes:
    SearchWindowTestCase: Tests cases for SearchWindow.
"""
import math
import unittest

from ddt import data, ddt, unpack
from django.test import override_settings

from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.solvers import SearchWindow


@ddt
class SearchWindowTestCase(unittest.TestCase):
    """Test class for SearchWindow."""

    @data(
        {"delta_min": 1.0, "delta_max": 1.0},
        {"delta_min": 2.0, "delta_max": 1.0},
        {"delta_min": 0.0, "delta_max": float("nan")},
        {"delta_min": 0.0, "delta_max": 1.0, "scan_points": 1},
        {"delta_min": 0.0, "delta_max": 1.0, "scan_points": 100.0},
        {"delta_min": 0.0, "delta_max": 1.0, "root_tol": 0.0},
        {"delta_min": 0.0, "delta_max": 1.0, "max_iterations": 0},
    )
    def test_invalid_window(self, kwargs):
        """ Test the rejected windows.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(InvalidParameterError, SearchWindow, **kwargs)

    def test_scan_grid(self):
        """ Test the scanned chirp rates.

        Expected behavior:
            - scan_points values from delta_min to delta_max with the documented step.
        """
        window = SearchWindow(-1.0, 1.0, scan_points=5)

        self.assertEqual([-1.0, -0.5, 0.0, 0.5, 1.0], window.scan_grid().tolist())
        self.assertEqual(0.5, window.step)

    @data((2.0, None, 3 * math.pi), (3 * math.pi / 2, None, 16 / (3 * math.pi)), (2.0, 1, math.pi))
    @unpack
    def test_around(self, tau, periods, half_width):
        """ Test the default window.

        Expected behavior:
            - Symmetric around zero with half width 4 pi periods / tau^2, three periods by default.
        """
        window = SearchWindow.around(tau, periods)

        self.assertAlmostEqual(-half_width, window.delta_min, places=12)
        self.assertAlmostEqual(half_width, window.delta_max, places=12)

    @override_settings(DRIVEN_QUBIT_SCAN_POINTS=64, DRIVEN_QUBIT_ROOT_TOL=1e-8, DRIVEN_QUBIT_MAX_ITERATIONS=30)
    def test_around_settings(self):
        """ Test that the resolution comes from the settings unless overridden.

        Expected behavior:
            - Settings values are used and keyword arguments win over them.
        """
        window = SearchWindow.around(1.0, root_tol=1e-6)

        self.assertEqual((64, 1e-6, 30), (window.scan_points, window.root_tol, window.max_iterations))

    def test_around_zero_time(self):
        """ Test the default window at tau = 0.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(InvalidParameterError, SearchWindow.around, 0.0)
