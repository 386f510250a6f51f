"""Closed-form evolution of the Pauli expectation values of a linearly driven, dephasing qubit."""
from driven_qubit.dynamics.data import DrivingProtocol, NoiseModel, PauliVector, PropagatorBlock
from driven_qubit.dynamics.propagation import (
    evolve,
    measured_x_expectation,
    measurement_dephasing_x,
    phase_integral,
    plus_state,
    propagator,
)

__all__ = [
    "DrivingProtocol",
    "NoiseModel",
    "PauliVector",
    "PropagatorBlock",
    "evolve",
    "measured_x_expectation",
    "measurement_dephasing_x",
    "phase_integral",
    "plus_state",
    "propagator",
]
