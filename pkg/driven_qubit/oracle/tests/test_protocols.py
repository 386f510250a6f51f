"""This file contains all the tests for the simulated witness and steering protocols.

Classes:
    WitnessOracleTestCase: Tests cases for witness_branches and witness_oracle.
    SteeringOracleTestCase: Tests cases for steering_branches and steering_oracle.
    SampledProtocolsTestCase: Tests cases for witness_probabilities and steering_values_oracle.
"""
import math
import unittest

import numpy as np
from ddt import data, ddt, unpack

from driven_qubit.dynamics import DrivingProtocol, NoiseModel
from driven_qubit.oracle import IntegratorConfig, steering_branches, steering_oracle, witness_branches, witness_oracle
from driven_qubit.oracle.protocols import steering_values_oracle, witness_probabilities
from driven_qubit.steering import steering_value
from driven_qubit.steering.quantities import steering_values
from driven_qubit.witness import prob_plus_measured, prob_plus_unmeasured, witness_value
from driven_qubit.witness.quantities import witness_values

CONFIG = IntegratorConfig(step=1e-3)


@ddt
class WitnessOracleTestCase(unittest.TestCase):
    """Test class for the simulated witness protocol."""

    def test_branches_match_closed_forms(self):
        """ Test both probabilities at tau=1, delta=0.5, omega0=1, gamma=0.1.

        Expected behavior:
            - p+ and p'+ match the closed forms to 1e-6.
        """
        tau, drive, noise = 1.0, DrivingProtocol(1.0, 0.5), NoiseModel(0.1)

        unmeasured, measured = witness_branches(tau, drive, noise, CONFIG)

        self.assertAlmostEqual(prob_plus_unmeasured(tau, drive, noise), unmeasured, delta=1e-6)
        self.assertAlmostEqual(prob_plus_measured(tau, drive, noise), measured, delta=1e-6)

    def test_measured_branch_at_half_period(self):
        """ Test the measured branch with delta=0 and omega0 tau = pi.

        Expected behavior:
            - p'+ = 1/2 for any dephasing.
        """
        for gamma in (0.0, 0.3):
            _, measured = witness_branches(math.pi, DrivingProtocol(1.0, 0.0), NoiseModel(gamma), CONFIG)

            self.assertAlmostEqual(0.5, measured, delta=1e-9)

    @data(
        (2.0, 0.0, 1.0, 0.0),
        (6.0, 0.3, 0.5, 0.2),
        (4.5, -1.2, 1.7, 0.05),
    )
    @unpack
    def test_oracle_matches_witness(self, tau, delta, omega0, gamma):
        """ Test the simulated witness against the closed form.

        Expected behavior:
            - Agreement to 1e-6.
        """
        drive, noise = DrivingProtocol(omega0, delta), NoiseModel(gamma)

        self.assertAlmostEqual(witness_value(tau, drive, noise), witness_oracle(tau, drive, noise, CONFIG), delta=1e-6)

    def test_initial_time(self):
        """ Test the protocol at tau = 0.

        Expected behavior:
            - Both branches stay in |+> and the witness vanishes.
        """
        self.assertEqual((1.0, 1.0), tuple(round(p, 12) for p in witness_branches(0.0, DrivingProtocol(), NoiseModel())))


@ddt
class SteeringOracleTestCase(unittest.TestCase):
    """Test class for the simulated steering protocol."""

    def test_four_equal_contributions(self):
        """ Test the branches of the steering protocol.

        Expected behavior:
            - Ordered x+, x-, y+, y- with outcome probability 1/2 each.
            - Every branch contributes exp(-2 gamma tau) cos^2(delta tau^2 / 2 + omega0 tau).
            - The four contributions agree with each other to 1e-9.
        """
        tau, drive, noise = 2.5, DrivingProtocol(1.0, 0.4), NoiseModel(0.1)
        expected = math.exp(-2 * 0.1 * tau) * math.cos(0.4 * tau ** 2 / 2 + tau) ** 2

        branches = steering_branches(tau, drive, noise, CONFIG)
        contributions = [branch.squared_expectation for branch in branches]

        self.assertEqual([("x", 1), ("x", -1), ("y", 1), ("y", -1)], [(b.basis, b.outcome) for b in branches])
        for branch in branches:
            self.assertAlmostEqual(0.5, branch.probability, places=15)
            self.assertAlmostEqual(expected, branch.squared_expectation, delta=1e-7)
        self.assertLess(max(contributions) - min(contributions), 1e-9)

    @data(
        (1.5, 0.1415, 1.0, 0.06),
        (7.0, -0.8, 0.2, 0.25),
        (0.0, 1.0, 1.0, 0.1),
    )
    @unpack
    def test_oracle_matches_steering(self, tau, delta, omega0, gamma):
        """ Test the simulated S2 against the closed form.

        Expected behavior:
            - Agreement to 1e-6.
        """
        drive, noise = DrivingProtocol(omega0, delta), NoiseModel(gamma)

        self.assertAlmostEqual(steering_value(tau, drive, noise), steering_oracle(tau, drive, noise, CONFIG), delta=1e-6)


class SampledProtocolsTestCase(unittest.TestCase):
    """Test class for the vectorized protocol samplers."""

    def test_argument_order_matches_closed_forms(self):
        """ Test the samplers with (tau, delta, omega0, gamma) arrays where delta and omega0 differ.

        Expected behavior:
            - |p+ - p'+| matches witness_values and the sampled S2 matches steering_values to 1e-6.
            - Swapping delta and omega0 changes the result.
        """
        tau = np.array([1.3, 4.0, 7.5])
        delta = np.array([0.2, -0.9, 1.6])
        omega0 = np.array([1.7, 0.4, 0.05])
        gamma = np.array([0.0, 0.1, 0.2])

        unmeasured, measured = witness_probabilities(tau, delta, omega0, gamma, CONFIG)
        sampled_steering = steering_values_oracle(tau, delta, omega0, gamma, CONFIG)

        np.testing.assert_allclose(np.abs(unmeasured - measured), witness_values(tau, delta, omega0, gamma), atol=1e-6)
        np.testing.assert_allclose(sampled_steering, steering_values(tau, delta, omega0, gamma), atol=1e-6)
        self.assertGreater(np.max(np.abs(sampled_steering - steering_values(tau, omega0, delta, gamma))), 1e-3)
