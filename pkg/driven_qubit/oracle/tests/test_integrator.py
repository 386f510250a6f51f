"""This file contains all the tests for the density-matrix integrator.

Classes:
    DensityMatrixTestCase: Tests cases for DensityMatrix.
    IntegratorConfigTestCase: Tests cases for IntegratorConfig.
    IntegrateTestCase: Tests cases for lindblad_rhs and integrate.
    MeasurementTestCase: Tests cases for nonselective_measure_x and l1_coherence.
"""
import math
import unittest

import numpy as np
from ddt import data, ddt
from django.test import override_settings

from driven_qubit.dynamics import DrivingProtocol, NoiseModel, PauliVector, evolve, plus_state
from driven_qubit.exceptions import IntegrationBudgetExceeded, InvalidParameterError
from driven_qubit.oracle import (
    DensityMatrix,
    IntegratorConfig,
    integrate,
    l1_coherence,
    lindblad_rhs,
    nonselective_measure_x,
)
from driven_qubit.oracle.integrator import PROJECTOR_PLUS


def bloch_error(rho, expected):
    """Euclidean distance between the Bloch vector of rho and a PauliVector."""
    return float(np.linalg.norm(rho.bloch().as_array() - expected.as_array()))


@ddt
class DensityMatrixTestCase(unittest.TestCase):
    """Test class for DensityMatrix."""

    @data(
        np.array([[1, 1], [0, 0]], dtype=complex),
        np.array([[0.6, 0], [0, 0.6]], dtype=complex),
        np.array([[1.5, 0], [0, -0.5]], dtype=complex),
        np.eye(3, dtype=complex) / 3,
    )
    def test_invalid_matrices(self, matrix):
        """ Test that non physical matrices are rejected.

        Expected behavior:
            - InvalidParameterError is raised for non Hermitian, wrong trace, negative or wrong shape.
        """
        self.assertRaises(InvalidParameterError, DensityMatrix, matrix)

    def test_plus_projector(self):
        """ Test the |+> state.

        Expected behavior:
            - The projector expectation is one and the Bloch vector is (1, 0, 0).
        """
        rho = DensityMatrix.plus()

        self.assertAlmostEqual(1.0, rho.expectation(PROJECTOR_PLUS), places=15)
        self.assertEqual(plus_state(), rho.bloch())

    def test_bloch_conversion(self):
        """ Test the conversion between Bloch vectors and density matrices.

        Expected behavior:
            - from_bloch followed by bloch returns the same vector.
            - The maximally mixed state has a zero vector.
        """
        state = PauliVector(0.2, -0.5, 0.4)

        self.assertLess(bloch_error(DensityMatrix.from_bloch(state), state), 1e-15)
        self.assertEqual(0.0, DensityMatrix.maximally_mixed().bloch().norm())


class IntegratorConfigTestCase(unittest.TestCase):
    """Test class for IntegratorConfig."""

    def test_invalid_values(self):
        """ Test that the step must be positive and the budget a positive integer.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(InvalidParameterError, IntegratorConfig, step=0.0)
        self.assertRaises(InvalidParameterError, IntegratorConfig, max_steps=0)

    def test_steps_for(self):
        """ Test the number of equal steps covering a span.

        Expected behavior:
            - The count is the ceiling of span / step, zero for an empty span.
        """
        config = IntegratorConfig(step=0.1)

        self.assertEqual(0, config.steps_for(0.0))
        self.assertEqual(10, config.steps_for(1.0))
        self.assertEqual(11, config.steps_for(1.01))

    @override_settings(DRIVEN_QUBIT_ORACLE_STEP=0.01, DRIVEN_QUBIT_ORACLE_MAX_STEPS=500)
    def test_from_settings(self):
        """ Test that the configuration follows the Django settings.

        Expected behavior:
            - step and max_steps are read from DRIVEN_QUBIT_ORACLE_* settings.
        """
        self.assertEqual(IntegratorConfig(step=0.01, max_steps=500), IntegratorConfig.from_settings())


class IntegrateTestCase(unittest.TestCase):
    """Test class for integrate."""

    def test_rhs_of_stationary_state(self):
        """ Test that the maximally mixed state does not move.

        Expected behavior:
            - The generator vanishes on I / 2.
        """
        rhs = lindblad_rhs(DensityMatrix.maximally_mixed(), 1.3, DrivingProtocol(1.0, 0.5), NoiseModel(0.2))

        np.testing.assert_allclose(rhs, np.zeros((2, 2)), atol=1e-16)

    def test_rhs_is_traceless_hermitian(self):
        """ Test the structure of the generator.

        Expected behavior:
            - d rho / dt is Hermitian and traceless.
        """
        rho = DensityMatrix.from_bloch(PauliVector(0.3, 0.4, 0.5))

        rhs = lindblad_rhs(rho, 0.7, DrivingProtocol(1.0, -0.8), NoiseModel(0.1))

        np.testing.assert_allclose(rhs, rhs.conj().T, atol=1e-16)
        self.assertAlmostEqual(0.0, abs(np.trace(rhs)), places=15)

    def test_agrees_with_closed_form(self):
        """ Test the Schrodinger-picture integration against the Heisenberg-picture propagator.

        Expected behavior:
            - The Bloch vectors agree to 1e-8 for driven and undriven qubits.
        """
        config = IntegratorConfig(step=1e-3)

        for drive in (DrivingProtocol(1.0, 0.0), DrivingProtocol(0.7, 0.4), DrivingProtocol(0.0, -1.1)):
            noise = NoiseModel(0.12)
            rho = integrate(DensityMatrix.plus(), 0.0, 4.0, drive, noise, config)

            self.assertLess(bloch_error(rho, evolve(plus_state(), 0.0, 4.0, drive, noise)), 1e-8)

    def test_quarter_period_sign(self):
        """ Test the rotation sense fixed by the density-matrix simulation.

        Expected behavior:
            - |+> evolves into (0, 1, 0) after a quarter period of the undriven qubit.
        """
        rho = integrate(DensityMatrix.plus(), 0.0, math.pi / 2, DrivingProtocol(1.0, 0.0), NoiseModel())

        np.testing.assert_allclose(rho.bloch().as_array(), [0.0, 1.0, 0.0], atol=1e-10)

    def test_fourth_order_convergence(self):
        """ Test the order of the RK4 scheme.

        Expected behavior:
            - Halving the step divides the error by about 16.
        """
        drive, noise, tau = DrivingProtocol(1.0, 0.5), NoiseModel(0.1), 5.0
        exact = evolve(plus_state(), 0.0, tau, drive, noise)

        coarse = bloch_error(integrate(DensityMatrix.plus(), 0.0, tau, drive, noise, IntegratorConfig(step=0.1)), exact)
        fine = bloch_error(integrate(DensityMatrix.plus(), 0.0, tau, drive, noise, IntegratorConfig(step=0.05)), exact)

        self.assertTrue(10 < coarse / fine < 22, coarse / fine)

    def test_budget(self):
        """ Test that integrations longer than the budget are refused.

        Expected behavior:
            - IntegrationBudgetExceeded carries the required and allowed step counts.
        """
        config = IntegratorConfig(step=0.25, max_steps=3)

        with self.assertRaises(IntegrationBudgetExceeded) as context:
            integrate(DensityMatrix.plus(), 0.0, 1.0, DrivingProtocol(), NoiseModel(), config)

        self.assertEqual((4, 3), (context.exception.required_steps, context.exception.max_steps))

    def test_reversed_interval(self):
        """ Test that backward integration is rejected.

        Expected behavior:
            - InvalidParameterError is raised.
        """
        self.assertRaises(
            InvalidParameterError, integrate, DensityMatrix.plus(), 1.0, 0.0, DrivingProtocol(), NoiseModel(),
        )

    def test_empty_interval(self):
        """ Test an integration over no time.

        Expected behavior:
            - The state is returned unchanged.
        """
        rho = integrate(DensityMatrix.plus(), 2.0, 2.0, DrivingProtocol(), NoiseModel(0.3))

        np.testing.assert_array_equal(DensityMatrix.plus().matrix, rho.matrix)


class MeasurementTestCase(unittest.TestCase):
    """Test class for the measurement and coherence helpers."""

    def test_measurement_is_idempotent(self):
        """ Test the nonselective sigma_x measurement.

        Expected behavior:
            - Only <sigma_x> survives and measuring twice equals measuring once.
        """
        rho = DensityMatrix.from_bloch(PauliVector(0.3, 0.4, 0.5))

        once = nonselective_measure_x(rho)
        twice = nonselective_measure_x(once)

        np.testing.assert_allclose(once.bloch().as_array(), [0.3, 0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(once.matrix, twice.matrix, atol=1e-16)

    def test_coherence_of_evolved_plus_state(self):
        """ Test the l1-norm of coherence of |+> under dephasing.

        Expected behavior:
            - It decays as exp(-gamma tau), independently of the drive.
        """
        noise = NoiseModel(0.2)
        rho = integrate(DensityMatrix.plus(), 0.0, 3.0, DrivingProtocol(1.0, 0.6), noise, IntegratorConfig(step=1e-3))

        self.assertAlmostEqual(noise.decay(3.0), l1_coherence(rho), delta=1e-9)
