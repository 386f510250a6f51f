"""Registry of the nonclassicality quantities that sweeps and solvers can work on.

Each entry bundles the vectorized kernels of one target so callers dispatch on a name
("witness" or "steering") instead of branching everywhere.
"""
from dataclasses import dataclass
from typing import Callable

from driven_qubit.constants import STEERING, WITNESS
from driven_qubit.steering.quantities import (
    steering_bounds,
    steering_derivatives,
    steering_stationarity_factor,
    steering_values,
)
from driven_qubit.validators import validate_target
from driven_qubit.witness.quantities import (
    witness_bounds,
    witness_derivatives,
    witness_extremum_indicator,
    witness_values,
)


@dataclass(frozen=True)
class Target:
    """
    Attributes:
        name (str): Registry key.
        values (Callable): f(tau, delta, omega0, gamma) -> target.
        bounds (Callable): f(tau, gamma) -> coherence bound.
        derivatives (Callable): f(tau, delta, omega0, gamma) -> d target / d delta.
        extremum_indicator (Callable): f(tau, delta, omega0), gamma-free function whose sign
            changes in delta are the extrema of the target.
    """
    name: str
    values: Callable
    bounds: Callable
    derivatives: Callable
    extremum_indicator: Callable


TARGET_REGISTRY = {
    WITNESS: Target(WITNESS, witness_values, witness_bounds, witness_derivatives, witness_extremum_indicator),
    STEERING: Target(STEERING, steering_values, steering_bounds, steering_derivatives, steering_stationarity_factor),
}


def get_target(name):
    """
    Look up a target by name.

    Raises:
        InvalidParameterError: If the name is unknown.

    Returns:
        Target: The registry entry.
    """
    validate_target(name)

    return TARGET_REGISTRY[name]
