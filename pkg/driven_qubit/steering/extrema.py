"""Analytic extrema of S2 in the chirp rate.

d S2 / d delta vanishes when delta tau^2 + 2 omega0 tau = k pi, which splits into

    D1 (maxima): delta = (2 k pi - 2 omega0 tau) / tau^2,        S2 = 2 exp(-2 gamma tau)
    D0 (minima): delta = ((2k + 1) pi - 2 omega0 tau) / tau^2,   S2 = 0
"""
import math

import numpy as np

from driven_qubit.constants import BRANCH_D0, BRANCH_D1, MAXIMUM, MINIMUM
from driven_qubit.dynamics.data import DrivingProtocol, NoiseModel
from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.steering.quantities import steering_value
from driven_qubit.validators import validate_finite, validate_positive
from driven_qubit.witness.data import ExtremumSolution


def steering_branch_delta(branch, k, tau, omega0):
    """
    Chirp rate of a steering branch.

    Args:
        branch (str): D1 for maxima, D0 for minima.
        k (int | numpy.ndarray): Branch index.
        tau (float | numpy.ndarray): Time, strictly positive.
        omega0 (float): Undriven frequency.

    Returns:
        float | numpy.ndarray: The chirp rate.
    """
    tau = np.asarray(tau, dtype=float)

    if branch == BRANCH_D1:
        return (2 * k * math.pi - 2 * omega0 * tau) / tau ** 2
    if branch == BRANCH_D0:
        return ((2 * k + 1) * math.pi - 2 * omega0 * tau) / tau ** 2

    raise InvalidParameterError(f"Unknown steering branch {branch!r}.")


def steering_extrema(k, tau, omega0, noise=None):
    """
    Maximum and minimum of S2 in the chirp rate for index k.

    Args:
        k (int): Branch index.
        tau (float): Time, strictly positive.
        omega0 (float): Undriven frequency.
        noise (NoiseModel): Dephasing used only to evaluate the returned values.

    Raises:
        InvalidParameterError: If tau is not strictly positive.

    Returns:
        list[ExtremumSolution]: The D1 maximum (saturating the bound) and the D0 minimum (S2 = 0).
    """
    validate_positive(tau, "tau")
    validate_finite(omega0, "omega0")
    noise = noise or NoiseModel()
    solutions = []

    for branch, kind in ((BRANCH_D1, MAXIMUM), (BRANCH_D0, MINIMUM)):
        delta = float(steering_branch_delta(branch, k, tau, omega0))
        solutions.append(ExtremumSolution(
            delta=delta,
            branch=branch,
            k=int(k),
            kind=kind,
            value=steering_value(tau, DrivingProtocol(omega0=omega0, delta=delta), noise),
            tau=tau,
        ))

    return solutions
