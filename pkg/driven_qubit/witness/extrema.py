"""Analytic extrema of the witness in the chirp rate for omega0 = 0.

Setting the derivative to zero with omega0 = 0 gives sin(a) (1 - 4 cos(a)) = 0 with
a = delta tau^2 / 4, hence the branches

    D0: delta = 8 pi k / tau^2                          (both sines vanish, Wq = 0, minima)
    D1: delta = 4 pi (2k + 1) / tau^2                   (Wq = exp(-gamma tau) / 2)
    D2: delta = 4 (2 pi k - arctan(sqrt(15))) / tau^2   (Wq = 9/32 exp(-gamma tau))
    D3: delta = 4 (2 pi k + arctan(sqrt(15))) / tau^2   (Wq = 9/32 exp(-gamma tau))

None of them depends on gamma.
"""
import math

import numpy as np

from driven_qubit.constants import BRANCH_D0, BRANCH_D1, BRANCH_D2, BRANCH_D3, MAXIMUM, MINIMUM
from driven_qubit.dynamics.data import DrivingProtocol, NoiseModel
from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.validators import validate_positive
from driven_qubit.witness.data import ExtremumSolution
from driven_qubit.witness.quantities import witness_value

SIDE_BRANCH_ANGLE = math.atan(math.sqrt(15))


def witness_branch_delta(branch, k, tau):
    """
    Chirp rate of a witness branch for omega0 = 0.

    Args:
        branch (str): D0, D1, D2 or D3.
        k (int | numpy.ndarray): Branch index.
        tau (float | numpy.ndarray): Time, strictly positive.

    Returns:
        float | numpy.ndarray: The chirp rate, broadcast over k and tau.
    """
    tau = np.asarray(tau, dtype=float)
    scale = 4 / tau ** 2
    branches = {
        BRANCH_D0: lambda: scale * 2 * math.pi * k,
        BRANCH_D1: lambda: scale * math.pi * (2 * k + 1),
        BRANCH_D2: lambda: scale * (2 * math.pi * k - SIDE_BRANCH_ANGLE),
        BRANCH_D3: lambda: scale * (2 * math.pi * k + SIDE_BRANCH_ANGLE),
    }

    if branch not in branches:
        raise InvalidParameterError(f"Unknown witness branch {branch!r}.")

    return branches[branch]()


def analytic_extrema_zero_omega(k, tau, noise=None):
    """
    Stationary points of the witness in the chirp rate for an undriven frequency omega0 = 0.

    Args:
        k (int): Branch index.
        tau (float): Time, strictly positive.
        noise (NoiseModel): Dephasing used only to evaluate the returned values.

    Raises:
        InvalidParameterError: If tau is not strictly positive.

    Returns:
        list[ExtremumSolution]: D0 (minimum), D1, D2 and D3 (maxima) for index k.
    """
    validate_positive(tau, "tau")
    noise = noise or NoiseModel()
    solutions = []

    for branch, kind in ((BRANCH_D0, MINIMUM), (BRANCH_D1, MAXIMUM), (BRANCH_D2, MAXIMUM), (BRANCH_D3, MAXIMUM)):
        delta = float(witness_branch_delta(branch, k, tau))
        solutions.append(ExtremumSolution(
            delta=delta,
            branch=branch,
            k=int(k),
            kind=kind,
            value=witness_value(tau, DrivingProtocol(omega0=0.0, delta=delta), noise),
            tau=tau,
        ))

    return solutions
