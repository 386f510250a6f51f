"""Extremum search in the chirp rate and tailoring of the driving amplitude.

For omega0 != 0 the extrema of the witness have no closed form. They are found by a dense scan
over a SearchWindow of a gamma-free function with the sign of the derivative. Every sign change
is refined with scipy's bisection and each root is classified by comparing the target one scan
step to either side, so extremum positions do not depend on gamma.

functions:
    find_extrema: All classified stationary points of a target inside a window.
    tailor: The chirp rate maximizing a target at a chosen time.
"""
import logging
import math

import numpy as np
from scipy.optimize import bisect

from driven_qubit.constants import BRANCH_D0, BRANCH_D1, BRANCH_D2, BRANCH_D3, MAXIMUM, MINIMUM, WITNESS
from driven_qubit.exceptions import NoExtremumFound, RootNotConverged
from driven_qubit.solvers.data import SearchWindow, TailorResult
from driven_qubit.targets import get_target
from driven_qubit.validators import validate_finite, validate_non_negative, validate_positive
from driven_qubit.witness.data import ExtremumSolution
from driven_qubit.witness.extrema import SIDE_BRANCH_ANGLE

logger = logging.getLogger(__name__)

# Maxima closer than this fraction of the bound are considered equal.
TIE_RTOL = 1e-9
# |sin(delta tau^2 / 4)| below this marks a D1 witness maximum.
LABEL_SINE_TOL = 1e-6


def _refine(function, bracket, window):
    root, result = bisect(
        function,
        *bracket,
        xtol=window.root_tol,
        maxiter=window.max_iterations,
        full_output=True,
        disp=False,
    )

    if not result.converged:
        logger.error("Bisection did not converge in bracket %s", bracket)
        raise RootNotConverged(bracket, result.iterations)

    return float(root)


def _stationary_points(function, deltas, factors, window):
    exact = factors == 0.0
    crossings = np.zeros(deltas.size, dtype=bool)
    crossings[:-1] = factors[:-1] * factors[1:] < 0
    roots = []

    for index in np.flatnonzero(exact | crossings):
        if exact[index]:
            roots.append(float(deltas[index]))
        else:
            roots.append(_refine(function, (float(deltas[index]), float(deltas[index + 1])), window))

    logger.debug("Scan of %s points found %s stationary points", deltas.size, len(roots))

    return roots


def _classify(value, left, right):
    if value >= left and value >= right:
        return MAXIMUM
    if value <= left and value <= right:
        return MINIMUM

    return None


def _witness_label(delta, tau, omega0, kind):  # pylint: disable=unused-argument
    quarter = delta * tau ** 2 / 4

    if kind == MINIMUM:
        return BRANCH_D0, round(quarter / (2 * math.pi))

    sine = math.sin(quarter)

    if abs(sine) < LABEL_SINE_TOL:
        return BRANCH_D1, round((quarter / math.pi - 1) / 2)
    if sine < 0:
        return BRANCH_D2, round((quarter + SIDE_BRANCH_ANGLE) / (2 * math.pi))

    return BRANCH_D3, round((quarter - SIDE_BRANCH_ANGLE) / (2 * math.pi))


def _steering_label(delta, tau, omega0, kind):
    phase = delta * tau ** 2 + 2 * omega0 * tau

    if kind == MAXIMUM:
        return BRANCH_D1, round(phase / (2 * math.pi))

    return BRANCH_D0, round((phase / math.pi - 1) / 2)


def find_extrema(target, tau, omega0, gamma, window=None):
    """
    Locate and classify the stationary points of a target in the chirp rate at fixed tau.

    Args:
        target (str): "witness" or "steering".
        tau (float): Time, strictly positive.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.
        window (SearchWindow): Scanned interval, defaults to SearchWindow.around(tau).

    Raises:
        RootNotConverged: If a bracket cannot be refined within `max_iterations`.

    Returns:
        list[ExtremumSolution]: Extrema sorted by delta. Empty when the window holds no sign change.
    """
    entry = get_target(target)
    validate_positive(tau, "tau")
    validate_finite(omega0, "omega0")
    validate_non_negative(gamma, "gamma")
    window = window or SearchWindow.around(tau)

    def indicator(delta):
        return float(entry.extremum_indicator(tau, delta, omega0))

    deltas = window.scan_grid()
    roots = _stationary_points(indicator, deltas, entry.extremum_indicator(tau, deltas, omega0), window)

    if not roots:
        logger.info(
            "No stationary point of the %s in delta window [%s, %s] at tau=%s",
            target, window.delta_min, window.delta_max, tau,
        )
        return []

    candidates = np.array(roots)
    values = entry.values(tau, candidates, omega0, gamma)
    lefts = entry.values(tau, candidates - window.step, omega0, gamma)
    rights = entry.values(tau, candidates + window.step, omega0, gamma)
    label = _witness_label if target == WITNESS else _steering_label
    solutions = []

    for delta, value, left, right in zip(candidates, values, lefts, rights):
        kind = _classify(value, left, right)

        if kind is None:
            logger.debug("Stationary point at delta=%s is not an extremum", delta)
            continue

        branch, k = label(float(delta), tau, omega0, kind)
        solutions.append(ExtremumSolution(
            delta=float(delta),
            branch=branch,
            k=int(k),
            kind=kind,
            value=float(value),
            tau=tau,
        ))

    return solutions


def tailor(target, tau_star, omega0, gamma, window=None):
    """
    Choose the chirp rate that maximizes the target at tau_star.

    The largest maximum in the window wins. Maxima equal within TIE_RTOL of the bound are
    resolved in favor of the weakest drive (smallest |delta|), and then of positive delta.

    Args:
        target (str): "witness" or "steering".
        tau_star (float): Chosen time, strictly positive.
        omega0 (float): Undriven frequency.
        gamma (float): Dephasing rate.
        window (SearchWindow): Scanned interval, defaults to SearchWindow.around(tau_star).

    Raises:
        NoExtremumFound: If the window holds no maximum.
        RootNotConverged: If a bracket cannot be refined.

    Returns:
        TailorResult: The selected maximum with its saturation of the coherence bound.
    """
    window = window or SearchWindow.around(tau_star)
    extrema = find_extrema(target, tau_star, omega0, gamma, window)
    maxima = [solution for solution in extrema if solution.is_maximum]

    if not maxima:
        raise NoExtremumFound(
            f"No maximum of the {target} in delta window [{window.delta_min}, {window.delta_max}] "
            f"at tau={tau_star}.",
        )

    bound = float(get_target(target).bounds(tau_star, gamma))
    best = max(solution.value for solution in maxima)
    tied = [solution for solution in maxima if solution.value >= best - TIE_RTOL * bound]
    weakest = min(abs(solution.delta) for solution in tied)
    chosen = max(
        (solution for solution in tied if abs(solution.delta) <= weakest + 10 * window.root_tol),
        key=lambda solution: solution.delta,
    )
    logger.info("Tailored %s at tau=%s: delta=%s value=%s", target, tau_star, chosen.delta, chosen.value)

    return TailorResult(
        target=target,
        tau_star=tau_star,
        omega0=omega0,
        gamma=gamma,
        delta_star=chosen.delta,
        target_value=chosen.value,
        bound_value=bound,
        saturation_ratio=min(1.0, chosen.value / bound) if bound > 0 else 0.0,
        all_extrema=tuple(extrema),
    )
