"""Value types of the driven qubit.

Classes:
    DrivingProtocol: Linear drive omega(t) = omega0 + delta * t.
    NoiseModel: Dephasing intensity gamma.
    PauliVector: Expectation values of sigma_x, sigma_y and sigma_z.
    PropagatorBlock: Damped rotation acting on the (x, y) components of a PauliVector.

Units are natural (hbar = 1, omega0 of order one); no unit system is built.
"""
import math
from dataclasses import dataclass

import numpy as np

from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.validators import validate_finite, validate_non_negative, validate_time_order

BLOCH_SLACK = 1e-9


@dataclass(frozen=True)
class DrivingProtocol:
    """
    Linear driving of the level splitting, omega(t) = omega0 + delta * t.

    Attributes:
        omega0 (float): Angular frequency of the undriven qubit (rad/time).
        delta (float): Chirp rate, the driving amplitude (rad/time^2). Zero recovers the undriven qubit.
    """
    omega0: float = 1.0
    delta: float = 0.0

    def __post_init__(self):
        validate_finite(self.omega0, "omega0")
        validate_finite(self.delta, "delta")

    def frequency(self, t):
        """Instantaneous angular frequency at time t."""
        return self.omega0 + self.delta * t


@dataclass(frozen=True)
class NoiseModel:
    """
    Pure dephasing in the qubit eigenbasis.

    Attributes:
        gamma (float): Dephasing rate (1/time). Zero means unitary evolution.
    """
    gamma: float = 0.0

    def __post_init__(self):
        validate_non_negative(self.gamma, "gamma")

    def decay(self, elapsed):
        """Coherence damping factor exp(-gamma * elapsed)."""
        return math.exp(-self.gamma * elapsed)


@dataclass(frozen=True)
class PauliVector:
    """
    Bloch vector of a qubit state. The identity expectation is always one and is not stored.

    Attributes:
        x (float): <sigma_x>.
        y (float): <sigma_y>.
        z (float): <sigma_z>.
    """
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            validate_finite(getattr(self, name), name)

        if self.x ** 2 + self.y ** 2 + self.z ** 2 > 1 + BLOCH_SLACK:
            raise InvalidParameterError(
                f"Bloch vector ({self.x!r}, {self.y!r}, {self.z!r}) lies outside the unit ball.",
            )

    def norm(self):
        """Euclidean length of the Bloch vector."""
        return math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)

    def is_pure(self):
        """True when the vector lies on the Bloch sphere within the numerical slack."""
        return abs(self.norm() ** 2 - 1) <= BLOCH_SLACK

    def as_array(self):
        """Return (x, y, z) as a numpy array."""
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True, eq=False)
class PropagatorBlock:
    """
    The (x, y) block of the operator-basis propagator between t1 and t2.

    The block is exp(-gamma (t2 - t1)) times a rotation, so both columns share that norm
    and are orthogonal. The z row and the identity row of the full propagator are trivial
    and are never stored.

    Attributes:
        m (numpy.ndarray): Read-only 2x2 real matrix.
        t1 (float): Start time.
        t2 (float): End time.
    """
    m: np.ndarray
    t1: float
    t2: float

    def __post_init__(self):
        validate_time_order(self.t1, self.t2)
        matrix = np.array(self.m, dtype=float)

        if matrix.shape != (2, 2):
            raise InvalidParameterError(f"Propagator block must be 2x2, got shape {matrix.shape}.")

        matrix.setflags(write=False)
        object.__setattr__(self, "m", matrix)

    def apply(self, x, y):
        """Map the (x, y) components through the block."""
        return self.m @ np.array([x, y], dtype=float)

    def then(self, later):
        """
        Compose this block with a later one, returning the propagator over both intervals.

        Args:
            later (PropagatorBlock): Block starting where this one ends.

        Returns:
            PropagatorBlock: Block from self.t1 to later.t2.
        """
        if not math.isclose(self.t2, later.t1, rel_tol=1e-12, abs_tol=1e-12):
            raise InvalidParameterError(
                f"Cannot compose blocks ending at {self.t2!r} and starting at {later.t1!r}.",
            )

        return PropagatorBlock(m=later.m @ self.m, t1=self.t1, t2=later.t2)

    def norm(self):
        """Operator 2-norm of the block."""
        return float(np.linalg.norm(self.m, 2))
