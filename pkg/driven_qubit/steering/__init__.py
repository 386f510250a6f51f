"""Closed-form temporal steering parameter S2 of the driven qubit."""
from driven_qubit.steering.data import SteeringPoint
from driven_qubit.steering.extrema import steering_branch_delta, steering_extrema
from driven_qubit.steering.quantities import (
    first_crossing_time,
    steering_bound,
    steering_delta_derivative,
    steering_point,
    steering_value,
)

__all__ = [
    "SteeringPoint",
    "first_crossing_time",
    "steering_bound",
    "steering_branch_delta",
    "steering_delta_derivative",
    "steering_extrema",
    "steering_point",
    "steering_value",
]
