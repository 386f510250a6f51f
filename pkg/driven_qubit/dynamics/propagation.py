"""Closed-form propagation of the Pauli expectation values.

In the operator basis {sigma_x, sigma_y, sigma_z, I} the dephasing master equation reads

    d/dt (x, y) = [[-gamma, -omega(t)], [omega(t), -gamma]] (x, y),    d/dt z = 0,

whose flow over [t1, t2] is a rotation by the accumulated phase damped by exp(-gamma (t2 - t1)).

functions:
    phase_integral: Accumulated phase of the linear drive.
    propagator: Damped-rotation block between two times.
    evolve: Propagate a PauliVector.
    measurement_dephasing_x: Nonselective sigma_x measurement update.
    plus_state: The |+> eigenstate of sigma_x.
    measured_x_expectation: <sigma_x>(tau) with a sigma_x measurement at tau / 2.
"""
import math

import numpy as np

from driven_qubit.dynamics.data import PauliVector, PropagatorBlock
from driven_qubit.validators import validate_finite, validate_non_negative, validate_time_order

# A nonselective sigma_x measurement keeps <sigma_x> and erases <sigma_y>.
MEASUREMENT_DEPHASING_X = np.array([[1.0, 0.0], [0.0, 0.0]])
MEASUREMENT_DEPHASING_X.setflags(write=False)


def phase_integral(t1, t2, drive):
    """
    Integral of omega(t) = omega0 + delta * t over [t1, t2].

    Args:
        t1 (float): Lower bound.
        t2 (float): Upper bound.
        drive (DrivingProtocol): Linear drive.

    Returns:
        float: (t2 - t1) * (omega0 + delta * (t1 + t2) / 2), antisymmetric in (t1, t2).
    """
    validate_finite(t1, "t1")
    validate_finite(t2, "t2")

    return (t2 - t1) * (drive.omega0 + drive.delta * (t1 + t2) / 2)


def propagator(t1, t2, drive, noise):
    """
    Propagator block of the (x, y) expectation values between t1 and t2.

    Args:
        t1 (float): Start time.
        t2 (float): End time, not before t1.
        drive (DrivingProtocol): Linear drive.
        noise (NoiseModel): Dephasing.

    Returns:
        PropagatorBlock: exp(-gamma (t2 - t1)) [[cos phi, -sin phi], [sin phi, cos phi]],
            phi being the phase integral. propagator(t, t) is the identity.
    """
    validate_time_order(t1, t2)
    phase = phase_integral(t1, t2, drive)
    damping = noise.decay(t2 - t1)
    cos, sin = math.cos(phase), math.sin(phase)

    return PropagatorBlock(
        m=damping * np.array([[cos, -sin], [sin, cos]]),
        t1=t1,
        t2=t2,
    )


def evolve(state, t1, t2, drive, noise):
    """
    Evolve a Bloch vector from t1 to t2. The z component is conserved.

    Returns:
        PauliVector: The evolved state.
    """
    x, y = propagator(t1, t2, drive, noise).apply(state.x, state.y)

    return PauliVector(float(x), float(y), state.z)


def measurement_dephasing_x(state):
    """
    State after a nonselective measurement of sigma_x: <sigma_y> and <sigma_z> are set to zero.

    Returns:
        PauliVector: (x, 0, 0).
    """
    x, y = MEASUREMENT_DEPHASING_X @ np.array([state.x, state.y])

    return PauliVector(float(x), float(y), 0.0)


def plus_state():
    """The |+> eigenstate of sigma_x, Bloch vector (1, 0, 0)."""
    return PauliVector(1.0, 0.0, 0.0)


def measured_x_expectation(tau, drive, noise):
    """
    <sigma_x>(tau) for |+> when sigma_x is measured nonselectively at tau / 2.

    Computed literally as V(tau/2, tau) . delta_x . V(0, tau/2) . (1, 0)^T, which equals
    exp(-gamma tau) / 2 [cos(delta tau^2 / 2 + omega0 tau) + cos(delta tau^2 / 4)].

    Args:
        tau (float): Final time, non-negative.
        drive (DrivingProtocol): Linear drive.
        noise (NoiseModel): Dephasing.

    Returns:
        float: The expectation value.
    """
    validate_non_negative(tau, "tau")
    first = propagator(0.0, tau / 2, drive, noise)
    second = propagator(tau / 2, tau, drive, noise)
    vector = second.m @ MEASUREMENT_DEPHASING_X @ first.m @ np.array([1.0, 0.0])

    return float(vector[0])
