"""Closed forms of the temporal steering parameter with N = 2 mutually unbiased bases (sigma_x, sigma_y).

functions:
    steering_value: S2 at one time.
    steering_bound: 2 exp(-2 gamma tau).
    steering_delta_derivative: d S2 / d delta.
    steering_point: SteeringPoint with violation flag.
    first_crossing_time: First time at which S2 falls to the classical bound.
"""
import logging

import numpy as np
from django.conf import settings
from scipy.optimize import bisect

from driven_qubit.constants import CLASSICAL_STEERING_BOUND
from driven_qubit.exceptions import RootNotConverged
from driven_qubit.steering.data import SteeringPoint
from driven_qubit.validators import validate_non_negative, validate_positive

logger = logging.getLogger(__name__)


def _phase(tau, delta, omega0):
    tau = np.asarray(tau, dtype=float)

    return delta * tau ** 2 / 2 + omega0 * tau


def steering_values(tau, delta, omega0, gamma):
    """Vectorized S2."""
    return 2 * np.exp(-2 * gamma * np.asarray(tau, dtype=float)) * np.cos(_phase(tau, delta, omega0)) ** 2


def steering_bounds(tau, gamma):
    """Vectorized 2 exp(-2 gamma tau)."""
    return 2 * np.exp(-2 * gamma * np.asarray(tau, dtype=float))


def steering_stationarity_factor(tau, delta, omega0):
    """sin(delta tau^2 + 2 omega0 tau); its zeros in delta are the extrema of S2, independent of gamma."""
    return np.sin(2 * _phase(tau, delta, omega0))


def steering_derivatives(tau, delta, omega0, gamma):
    """Vectorized -tau^2 exp(-2 gamma tau) sin(delta tau^2 + 2 omega0 tau)."""
    tau = np.asarray(tau, dtype=float)

    return -tau ** 2 * np.exp(-2 * gamma * tau) * steering_stationarity_factor(tau, delta, omega0)


def steering_value(tau, drive, noise):
    """
    Temporal steering parameter S2(tau).

    Returns:
        float: A value in [0, 2].
    """
    validate_non_negative(tau, "tau")

    return float(steering_values(tau, drive.delta, drive.omega0, noise.gamma))


def steering_bound(tau, noise):
    """
    Upper bound of S2, twice the square of the l1-norm of coherence.

    Returns:
        float: A value in (0, 2].
    """
    validate_non_negative(tau, "tau")

    return float(steering_bounds(tau, noise.gamma))


def steering_delta_derivative(tau, drive, noise):
    """
    Partial derivative of S2 with respect to the chirp rate.

    Returns:
        float: -tau^2 exp(-2 gamma tau) sin(delta tau^2 + 2 omega0 tau), zero at tau = 0.
    """
    validate_non_negative(tau, "tau")

    return float(steering_derivatives(tau, drive.delta, drive.omega0, noise.gamma))


def steering_point(tau, drive, noise):
    """
    Collect S2, its bound and the inequality check at tau.

    Returns:
        SteeringPoint: The record.
    """
    value = steering_value(tau, drive, noise)

    return SteeringPoint(
        tau=tau,
        value=value,
        bound=steering_bound(tau, noise),
        violates_inequality=value > CLASSICAL_STEERING_BOUND,
    )


def first_crossing_time(drive, noise, tau_max, scan_points=None, root_tol=None, max_iterations=None):
    """
    First time at which S2 drops to the classical bound 1.

    S2(0) = 2, so the steering inequality is violated at early times. The interval [0, tau_max]
    is scanned for the first sign change of S2 - 1, which is then refined by bisection.

    Args:
        drive (DrivingProtocol): Linear drive.
        noise (NoiseModel): Dephasing.
        tau_max (float): End of the scanned interval.
        scan_points (int): Scan resolution, defaults to DRIVEN_QUBIT_SCAN_POINTS.
        root_tol (float): Bisection tolerance, defaults to DRIVEN_QUBIT_ROOT_TOL.
        max_iterations (int): Bisection budget, defaults to DRIVEN_QUBIT_MAX_ITERATIONS.

    Raises:
        RootNotConverged: If bisection does not converge.

    Returns:
        float | None: The crossing time, or None when S2 stays above 1 on the interval.
    """
    validate_positive(tau_max, "tau_max")
    scan_points = scan_points or getattr(settings, "DRIVEN_QUBIT_SCAN_POINTS", 2048)
    root_tol = root_tol or getattr(settings, "DRIVEN_QUBIT_ROOT_TOL", 1e-10)
    max_iterations = max_iterations or getattr(settings, "DRIVEN_QUBIT_MAX_ITERATIONS", 200)

    def excess(tau):
        return float(steering_values(tau, drive.delta, drive.omega0, noise.gamma)) - CLASSICAL_STEERING_BOUND

    taus = np.linspace(0.0, tau_max, scan_points)
    excesses = steering_values(taus, drive.delta, drive.omega0, noise.gamma) - CLASSICAL_STEERING_BOUND
    crossings = np.flatnonzero(excesses <= 0)

    if crossings.size == 0:
        logger.info("S2 stays above the classical bound up to tau=%s", tau_max)
        return None

    index = int(crossings[0])

    if excesses[index] == 0:
        return float(taus[index])

    bracket = (float(taus[index - 1]), float(taus[index]))
    root, result = bisect(excess, *bracket, xtol=root_tol, maxiter=max_iterations, full_output=True, disp=False)

    if not result.converged:
        raise RootNotConverged(bracket, result.iterations)

    return float(root)
