"""Closed forms of the driven quantum witness.

With A = sigma_x(tau / 2), B = sigma_x(tau) and the qubit prepared in |+>:

    p+(tau)  = [1 + exp(-gamma tau) cos(delta tau^2 / 2 + omega0 tau)] / 2
    p'+(tau) = 1/2 + exp(-gamma tau) / 4 [cos(delta tau^2 / 4) + cos(delta tau^2 / 2 + omega0 tau)]
    Wq       = exp(-gamma tau) / 4 |cos(delta tau^2 / 4) - cos(delta tau^2 / 2 + omega0 tau)|

The plural functions are numpy kernels broadcasting over tau, delta, omega0 and gamma; the
singular ones take the value types and return floats.
"""
import numpy as np

from driven_qubit.validators import validate_non_negative, validate_positive
from driven_qubit.witness.data import WitnessPoint

# Below this the inner difference counts as a zero of the witness.
WITNESS_ZERO_TOL = 1e-14


def _phases(tau, delta, omega0):
    tau = np.asarray(tau, dtype=float)
    quarter = delta * tau ** 2 / 4
    full = delta * tau ** 2 / 2 + omega0 * tau

    return quarter, full


def witness_values(tau, delta, omega0, gamma):
    """Vectorized Wq."""
    quarter, full = _phases(tau, delta, omega0)

    return 0.25 * np.exp(-gamma * np.asarray(tau, dtype=float)) * np.abs(np.cos(quarter) - np.cos(full))


def witness_bounds(tau, gamma):
    """Vectorized exp(-gamma tau) / 2."""
    return 0.5 * np.exp(-gamma * np.asarray(tau, dtype=float))


def witness_stationarity_factor(tau, delta, omega0):
    """
    Smooth factor sin(delta tau^2 / 4) - 2 sin(delta tau^2 / 2 + omega0 tau) of the witness derivative.

    Its zeros are the candidate stationary points in delta; it does not depend on gamma.
    """
    quarter, full = _phases(tau, delta, omega0)

    return np.sin(quarter) - 2 * np.sin(full)


def witness_extremum_indicator(tau, delta, omega0):
    """
    Stationarity factor times the sign of cos(delta tau^2 / 4) - cos(delta tau^2 / 2 + omega0 tau).

    It has the opposite sign of d Wq / d delta and does not depend on gamma. Its sign changes are
    the smooth extrema of the witness and the cusps where the witness vanishes.
    """
    quarter, full = _phases(tau, delta, omega0)
    inner = np.cos(quarter) - np.cos(full)
    sign = np.where(np.abs(inner) <= WITNESS_ZERO_TOL, 0.0, np.sign(inner))

    return witness_stationarity_factor(tau, delta, omega0) * sign


def witness_derivatives(tau, delta, omega0, gamma):
    """Vectorized d Wq / d delta, zero where Wq vanishes."""
    tau = np.asarray(tau, dtype=float)

    return -(tau ** 2 / 16) * np.exp(-gamma * tau) * witness_extremum_indicator(tau, delta, omega0)


def prob_plus_unmeasured(tau, drive, noise):
    """
    Probability of |+> at tau without the intermediate measurement.

    Returns:
        float: A probability in [0, 1].
    """
    validate_non_negative(tau, "tau")
    _, full = _phases(tau, drive.delta, drive.omega0)

    return float(0.5 * (1 + noise.decay(tau) * np.cos(full)))


def prob_plus_measured(tau, drive, noise):
    """
    Probability of |+> at tau after a nonselective sigma_x measurement at tau / 2.

    Returns:
        float: A probability in [0, 1].
    """
    validate_non_negative(tau, "tau")
    quarter, full = _phases(tau, drive.delta, drive.omega0)

    return float(0.5 + noise.decay(tau) / 4 * (np.cos(quarter) + np.cos(full)))


def witness_value(tau, drive, noise):
    """
    Quantum witness Wq = |p+(tau) - p'+(tau)|.

    Returns:
        float: A value in [0, exp(-gamma tau) / 2].
    """
    validate_non_negative(tau, "tau")

    return float(witness_values(tau, drive.delta, drive.omega0, noise.gamma))


def coherence_bound(tau, noise):
    """
    Upper bound of the witness, half the l1-norm of coherence exp(-gamma tau).

    Returns:
        float: A value in (0, 1/2].
    """
    validate_non_negative(tau, "tau")

    return float(witness_bounds(tau, noise.gamma))


def witness_delta_derivative(tau, drive, noise):
    """
    Partial derivative of the witness with respect to the chirp rate.

    -(tau^2 / 16) exp(-gamma tau) [sin(delta tau^2 / 4) - 2 sin(delta tau^2 / 2 + omega0 tau)]
    times the sign of cos(delta tau^2 / 4) - cos(delta tau^2 / 2 + omega0 tau). Where the witness
    vanishes the sign is undefined and zero is returned by convention.

    Args:
        tau (float): Time, strictly positive.

    Returns:
        float: The derivative.
    """
    validate_positive(tau, "tau")

    return float(witness_derivatives(tau, drive.delta, drive.omega0, noise.gamma))


def witness_point(tau, drive, noise):
    """
    Collect the witness quantities at tau.

    Returns:
        WitnessPoint: Probabilities, witness and bound.
    """
    return WitnessPoint(
        tau=tau,
        p_plus=prob_plus_unmeasured(tau, drive, noise),
        p_plus_measured=prob_plus_measured(tau, drive, noise),
        value=witness_value(tau, drive, noise),
        bound=coherence_bound(tau, noise),
    )
