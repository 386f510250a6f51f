"""Solver records.

Classes:
    SearchWindow: Chirp-rate interval and resolution of an extremum search.
    TailorResult: The chirp rate maximizing a target at a chosen time.
"""
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from django.conf import settings

from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.validators import validate_finite, validate_positive
from driven_qubit.witness.data import ExtremumSolution


@dataclass(frozen=True)
class SearchWindow:
    """
    Attributes:
        delta_min (float): Lower end of the scanned chirp rates.
        delta_max (float): Upper end of the scanned chirp rates.
        scan_points (int): Number of equally spaced scan points, at least 2.
        root_tol (float): Absolute bisection tolerance in delta.
        max_iterations (int): Bisection budget per bracket.
    """
    delta_min: float
    delta_max: float
    scan_points: int = 2048
    root_tol: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        validate_finite(self.delta_min, "delta_min")
        validate_finite(self.delta_max, "delta_max")
        validate_positive(self.root_tol, "root_tol")

        if self.delta_min >= self.delta_max:
            raise InvalidParameterError(
                f"delta_min must be lower than delta_max, got [{self.delta_min!r}, {self.delta_max!r}].",
            )
        if not isinstance(self.scan_points, int) or self.scan_points < 2:
            raise InvalidParameterError(f"scan_points must be an integer >= 2, got {self.scan_points!r}.")
        if not isinstance(self.max_iterations, int) or self.max_iterations < 1:
            raise InvalidParameterError(f"max_iterations must be a positive integer, got {self.max_iterations!r}.")

    @classmethod
    def around(cls, tau, periods=None, **kwargs):
        """
        Default window [-4 pi periods / tau^2, 4 pi periods / tau^2], tracking the 1 / tau^2 scaling
        of the analytic branches. Resolution settings default to the DRIVEN_QUBIT_* settings.

        Args:
            tau (float): Time, strictly positive.
            periods (int): Number of 4 pi / tau^2 periods on each side.
            **kwargs: scan_points, root_tol or max_iterations overrides.

        Returns:
            SearchWindow: The window.
        """
        validate_positive(tau, "tau")
        periods = periods or getattr(settings, "DRIVEN_QUBIT_WINDOW_PERIODS", 3)
        half_width = 4 * math.pi * periods / tau ** 2
        kwargs.setdefault("scan_points", getattr(settings, "DRIVEN_QUBIT_SCAN_POINTS", 2048))
        kwargs.setdefault("root_tol", getattr(settings, "DRIVEN_QUBIT_ROOT_TOL", 1e-10))
        kwargs.setdefault("max_iterations", getattr(settings, "DRIVEN_QUBIT_MAX_ITERATIONS", 200))

        return cls(delta_min=-half_width, delta_max=half_width, **kwargs)

    @property
    def step(self):
        """Spacing of the scan grid."""
        return (self.delta_max - self.delta_min) / (self.scan_points - 1)

    def scan_grid(self):
        """The scanned chirp rates."""
        return np.linspace(self.delta_min, self.delta_max, self.scan_points)


@dataclass(frozen=True)
class TailorResult:
    """
    Attributes:
        target (str): "witness" or "steering".
        tau_star (float): Time at which the target is maximized.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.
        delta_star (float): Chirp rate of the selected maximum.
        target_value (float): Target at delta_star.
        bound_value (float): Coherence bound at tau_star.
        saturation_ratio (float): target_value / bound_value, in [0, 1].
        all_extrema (tuple[ExtremumSolution]): Every extremum found in the window.
    """
    target: str
    tau_star: float
    omega0: float
    gamma: float
    delta_star: float
    target_value: float
    bound_value: float
    saturation_ratio: float
    all_extrema: Tuple[ExtremumSolution, ...] = field(default_factory=tuple)
