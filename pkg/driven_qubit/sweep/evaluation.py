"""Evaluation of time traces, (tau, delta) grids and their extremum overlays.

functions:
    trace: Target, bound pairs along a time axis at fixed delta.
    grid: Exhaustive evaluation of a GridSpec.
    overlay_extrema: Curves delta(tau) of the maxima branches inside a grid.
"""
import logging
from collections import defaultdict

import numpy as np
from django.conf import settings

from driven_qubit.constants import BRANCH_D1, MAXIMUM, STEERING, WITNESS, WITNESS_MAXIMUM_BRANCHES
from driven_qubit.exceptions import GridTooLarge, InvalidParameterError
from driven_qubit.solvers import SearchWindow, find_extrema
from driven_qubit.steering.extrema import steering_branch_delta
from driven_qubit.sweep.data import OverlayCurve, SweepGrid, SweepTrace
from driven_qubit.targets import get_target
from driven_qubit.validators import validate_finite, validate_non_negative
from driven_qubit.witness.extrema import witness_branch_delta

logger = logging.getLogger(__name__)


def _time_axis(taus):
    taus = np.asarray(taus, dtype=float)

    if taus.ndim != 1 or taus.size == 0:
        raise InvalidParameterError("taus must be a non-empty one-dimensional sequence.")
    if not np.all(np.isfinite(taus)) or np.any(taus < 0):
        raise InvalidParameterError("taus must be finite and non-negative.")
    if np.any(np.diff(taus) < 0):
        raise InvalidParameterError("taus must be in ascending order.")

    return taus


def trace(target, taus, delta, omega0, gamma):
    """
    Evaluate a target and its coherence bound along a time axis.

    Args:
        target (str): "witness" or "steering".
        taus (Sequence[float]): Ascending, non-negative times.
        delta (float): Chirp rate.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.

    Returns:
        SweepTrace: Pointwise values equal to witness_value / steering_value.
    """
    entry = get_target(target)
    validate_finite(delta, "delta")
    validate_finite(omega0, "omega0")
    validate_non_negative(gamma, "gamma")
    taus = _time_axis(taus)

    return SweepTrace(
        target=target,
        delta=delta,
        omega0=omega0,
        gamma=gamma,
        taus=taus,
        values=entry.values(taus, delta, omega0, gamma),
        bounds=entry.bounds(taus, gamma),
    )


def grid(spec, overlay_k=None):
    """
    Evaluate every cell of a grid, tau outer and delta inner.

    Args:
        spec (GridSpec): Axes and parameters.
        overlay_k (Iterable[int]): Branch indices of the overlay curves, none by default.

    Raises:
        GridTooLarge: If the grid exceeds DRIVEN_QUBIT_MAX_GRID_CELLS.

    Returns:
        SweepGrid: Values and overlays.
    """
    max_cells = getattr(settings, "DRIVEN_QUBIT_MAX_GRID_CELLS", 4_000_000)

    if spec.cells > max_cells:
        logger.error("Grid of %s cells exceeds the cap of %s", spec.cells, max_cells)
        raise GridTooLarge(f"Grid has {spec.cells} cells, the limit is {max_cells}.")

    entry = get_target(spec.target)
    values = entry.values(spec.taus()[:, None], spec.deltas()[None, :], spec.omega0, spec.gamma)
    overlays = overlay_extrema(spec, overlay_k) if overlay_k is not None else []
    logger.info("Evaluated %s grid of %s x %s cells", spec.target, spec.tau_steps, spec.delta_steps)

    return SweepGrid(spec=spec, values=values, overlays=tuple(overlays))


def _analytic_curve(branch, k, taus, spec):
    if spec.target == STEERING:
        deltas = steering_branch_delta(branch, k, taus, spec.omega0)
    else:
        deltas = witness_branch_delta(branch, k, taus)

    inside = (deltas >= spec.delta_min) & (deltas <= spec.delta_max)

    return OverlayCurve(
        branch=branch,
        k=int(k),
        kind=MAXIMUM,
        taus=tuple(float(tau) for tau in taus[inside]),
        deltas=tuple(float(delta) for delta in deltas[inside]),
    )


def _numeric_curves(k_values, taus, spec):
    window_settings = {
        "scan_points": getattr(settings, "DRIVEN_QUBIT_SCAN_POINTS", 2048),
        "root_tol": getattr(settings, "DRIVEN_QUBIT_ROOT_TOL", 1e-10),
        "max_iterations": getattr(settings, "DRIVEN_QUBIT_MAX_ITERATIONS", 200),
    }
    window = SearchWindow(spec.delta_min, spec.delta_max, **window_settings)
    points = defaultdict(list)

    for tau in taus:
        for solution in find_extrema(spec.target, float(tau), spec.omega0, spec.gamma, window):
            if solution.is_maximum and solution.k in k_values:
                points[(solution.branch, solution.k)].append((solution.tau, solution.delta))

    return [
        OverlayCurve(
            branch=branch,
            k=k,
            kind=MAXIMUM,
            taus=tuple(tau for tau, _ in points[(branch, k)]),
            deltas=tuple(delta for _, delta in points[(branch, k)]),
        )
        for branch, k in sorted(points)
    ]


def overlay_extrema(spec, k_range):
    """
    Positions of the maxima branches over the time axis of a grid.

    Witness branches for omega0 = 0 and steering branches come from their closed forms. For a
    witness with omega0 != 0 the maxima are located numerically at every time and grouped by
    their (branch, k) label.

    Args:
        spec (GridSpec): Grid whose axes limit the curves.
        k_range (Iterable[int]): Branch indices.

    Returns:
        list[OverlayCurve]: Curves ordered by branch then k; empty for an empty k_range.
    """
    k_values = sorted({int(k) for k in k_range})
    taus = spec.taus()
    taus = taus[taus > 0]

    if not k_values or taus.size == 0:
        return []
    if spec.target == WITNESS and spec.omega0 != 0:
        return _numeric_curves(set(k_values), taus, spec)

    branches = WITNESS_MAXIMUM_BRANCHES if spec.target == WITNESS else (BRANCH_D1,)

    return [_analytic_curve(branch, k, taus, spec) for branch in branches for k in k_values]
