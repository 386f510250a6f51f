"""Sweep records.

Classes:
    GridSpec: Axes, drive and noise of a (tau, delta) grid.
    OverlayCurve: Extremum position delta(tau) of one labelled branch.
    SweepGrid: Evaluated grid, row-major with tau outer and delta inner.
    SweepTrace: Evaluated time trace at fixed delta.
"""
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.targets import get_target
from driven_qubit.validators import validate_finite, validate_non_negative, validate_target


def _read_only(values):
    array = np.array(values, dtype=float)
    array.setflags(write=False)

    return array


@dataclass(frozen=True)
class GridSpec:
    """
    Attributes:
        target (str): "witness" or "steering".
        tau_min, tau_max (float): Time axis limits, 0 <= tau_min < tau_max.
        tau_steps (int): Number of times, at least 2.
        delta_min, delta_max (float): Chirp-rate axis limits.
        delta_steps (int): Number of chirp rates, at least 2.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.
    """
    target: str
    tau_min: float
    tau_max: float
    tau_steps: int
    delta_min: float
    delta_max: float
    delta_steps: int
    omega0: float = 1.0
    gamma: float = 0.0

    def __post_init__(self):
        validate_target(self.target)
        validate_non_negative(self.tau_min, "tau_min")

        for name in ("tau_max", "delta_min", "delta_max", "omega0"):
            validate_finite(getattr(self, name), name)

        validate_non_negative(self.gamma, "gamma")

        for axis in ("tau", "delta"):
            low, high = getattr(self, f"{axis}_min"), getattr(self, f"{axis}_max")
            steps = getattr(self, f"{axis}_steps")

            if low >= high:
                raise InvalidParameterError(f"{axis}_min must be lower than {axis}_max, got [{low!r}, {high!r}].")
            if not isinstance(steps, int) or steps < 2:
                raise InvalidParameterError(f"{axis}_steps must be an integer >= 2, got {steps!r}.")

    @property
    def cells(self):
        """Total number of grid cells."""
        return self.tau_steps * self.delta_steps

    def taus(self):
        """Ascending time axis."""
        return np.linspace(self.tau_min, self.tau_max, self.tau_steps)

    def deltas(self):
        """Ascending chirp-rate axis."""
        return np.linspace(self.delta_min, self.delta_max, self.delta_steps)

    def as_dict(self):
        return {
            "target": self.target,
            "tau_min": self.tau_min,
            "tau_max": self.tau_max,
            "tau_steps": self.tau_steps,
            "delta_min": self.delta_min,
            "delta_max": self.delta_max,
            "delta_steps": self.delta_steps,
            "omega0": self.omega0,
            "gamma": self.gamma,
        }


@dataclass(frozen=True)
class OverlayCurve:
    """
    Attributes:
        branch (str): Extremum family, D0 to D3.
        k (int): Branch index.
        kind (str): "maximum" or "minimum".
        taus (tuple[float]): Times at which the branch lies inside the delta axis.
        deltas (tuple[float]): Branch position at each time.
    """
    branch: str
    k: int
    kind: str
    taus: Tuple[float, ...] = field(default_factory=tuple)
    deltas: Tuple[float, ...] = field(default_factory=tuple)

    def as_dict(self):
        return {
            "branch": self.branch,
            "k": self.k,
            "kind": self.kind,
            "taus": list(self.taus),
            "deltas": list(self.deltas),
        }


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """
    Attributes:
        spec (GridSpec): The evaluated grid.
        values (numpy.ndarray): Read-only target values with shape (tau_steps, delta_steps).
        overlays (tuple[OverlayCurve]): Extremum curves, possibly empty.
    """
    spec: GridSpec
    values: np.ndarray
    overlays: Tuple[OverlayCurve, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = _read_only(self.values)

        if values.shape != (self.spec.tau_steps, self.spec.delta_steps):
            raise InvalidParameterError(
                f"values have shape {values.shape}, expected {(self.spec.tau_steps, self.spec.delta_steps)}.",
            )

        object.__setattr__(self, "values", values)

    def bounds(self):
        """Coherence bound of every row."""
        return np.asarray(get_target(self.spec.target).bounds(self.spec.taus(), self.spec.gamma), dtype=float)

    def column_argmax(self):
        """
        Chirp rate of the largest value at every time, the ridge of the density plot.

        Returns:
            numpy.ndarray: One delta per tau, shape (tau_steps,).
        """
        return self.spec.deltas()[np.argmax(self.values, axis=1)]

    def cells(self):
        """Yield (tau, delta, value, bound) in row-major order."""
        deltas = self.spec.deltas()

        for tau, row, bound in zip(self.spec.taus(), self.values, self.bounds()):
            for delta, value in zip(deltas, row):
                yield float(tau), float(delta), float(value), float(bound)

    def as_dict(self):
        return {
            "spec": self.spec.as_dict(),
            "values": self.values.tolist(),
            "overlays": [overlay.as_dict() for overlay in self.overlays],
        }


@dataclass(frozen=True, eq=False)
class SweepTrace:
    """
    Attributes:
        target (str): "witness" or "steering".
        delta (float): Chirp rate.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.
        taus (numpy.ndarray): Ascending times.
        values (numpy.ndarray): Target at every time.
        bounds (numpy.ndarray): Coherence bound at every time.
    """
    target: str
    delta: float
    omega0: float
    gamma: float
    taus: np.ndarray
    values: np.ndarray
    bounds: np.ndarray

    def __post_init__(self):
        for name in ("taus", "values", "bounds"):
            object.__setattr__(self, name, _read_only(getattr(self, name)))

    def cells(self):
        """Yield (tau, delta, value, bound) in time order."""
        for tau, value, bound in zip(self.taus, self.values, self.bounds):
            yield float(tau), self.delta, float(value), float(bound)

    def as_dict(self):
        return {
            "spec": {
                "target": self.target,
                "delta": self.delta,
                "omega0": self.omega0,
                "gamma": self.gamma,
            },
            "taus": self.taus.tolist(),
            "values": self.values.tolist(),
            "bounds": self.bounds.tolist(),
        }
