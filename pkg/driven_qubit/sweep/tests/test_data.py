"""This file contains all the tests for the sweep records.

Classes:
    GridSpecTestCase: Tests cases for GridSpec.
    SweepGridTestCase: Tests cases for SweepGrid.
"""
import unittest

import numpy as np
from ddt import data, ddt

from driven_qubit.constants import STEERING, WITNESS
from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.sweep import GridSpec, SweepGrid

VALID_SPEC = {
    "target": WITNESS,
    "tau_min": 0.0,
    "tau_max": 1.0,
    "tau_steps": 3,
    "delta_min": -1.0,
    "delta_max": 1.0,
    "delta_steps": 5,
}


@ddt
class GridSpecTestCase(unittest.TestCase):
    """Test class for GridSpec."""

    @data(
        {"target": "concurrence"},
        {"tau_min": -0.5},
        {"tau_min": 1.0},
        {"delta_max": -1.0},
        {"tau_steps": 1},
        {"delta_steps": 4.0},
        {"gamma": -0.1},
        {"omega0": float("nan")},
    )
    def test_invalid_spec(self, overrides):
        """ Test the rejected grids.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(InvalidParameterError, GridSpec, **{**VALID_SPEC, **overrides})

    def test_axes(self):
        """ Test the generated axes.

        Expected behavior:
            - Both axes are ascending linspaces including their limits.
            - cells is the product of the steps.
        """
        spec = GridSpec(**VALID_SPEC)

        self.assertEqual([0.0, 0.5, 1.0], spec.taus().tolist())
        self.assertEqual([-1.0, -0.5, 0.0, 0.5, 1.0], spec.deltas().tolist())
        self.assertEqual(15, spec.cells)
        self.assertEqual({**VALID_SPEC, "omega0": 1.0, "gamma": 0.0}, spec.as_dict())


class SweepGridTestCase(unittest.TestCase):
    """Test class for SweepGrid."""

    def setUp(self):
        """Setup common conditions for every test case"""
        self.spec = GridSpec(**{**VALID_SPEC, "target": STEERING, "gamma": 0.5})

    def test_shape_mismatch(self):
        """ Test values that do not match the axes.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(InvalidParameterError, SweepGrid, self.spec, np.zeros((5, 3)))

    def test_read_only(self):
        """ Test that stored values cannot be modified.

        Expected behavior:
            - Assigning into the values raises ValueError.
        """
        result = SweepGrid(self.spec, np.zeros((3, 5)))

        with self.assertRaises(ValueError):
            result.values[0, 0] = 1.0

    def test_cells_and_argmax(self):
        """ Test the row-major cell order and the ridge.

        Expected behavior:
            - Cells iterate tau outer and delta inner with the row bound.
            - column_argmax returns the delta of the row maximum.
        """
        values = np.zeros((3, 5))
        values[0, 4], values[1, 0], values[2, 2] = 1.0, 1.0, 1.0
        result = SweepGrid(self.spec, values)
        cells = list(result.cells())

        self.assertEqual(15, len(cells))
        self.assertEqual((0.0, -1.0, 0.0, 2.0), cells[0])
        self.assertEqual((0.5, -1.0, 1.0, 2 * np.exp(-0.5)), cells[5])
        self.assertEqual([1.0, -1.0, 0.0], result.column_argmax().tolist())
