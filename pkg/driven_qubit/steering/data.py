"""Steering records."""
from dataclasses import dataclass


@dataclass(frozen=True)
class SteeringPoint:
    """
    Temporal steering parameter at one time.

    Attributes:
        tau (float): Time of Bob's measurement.
        value (float): S2 = 2 exp(-2 gamma tau) cos^2(delta tau^2 / 2 + omega0 tau).
        bound (float): Twice the squared l1-norm of coherence, 2 exp(-2 gamma tau).
        violates_inequality (bool): True when value exceeds the classical bound 1.
    """
    tau: float
    value: float
    bound: float
    violates_inequality: bool
