"""Direct simulation of the witness and temporal steering protocols on density matrices.

functions:
    witness_probabilities: p+ without and with the intermediate measurement, vectorized over samples.
    steering_contributions: Per-branch squared expectations of the steering protocol, vectorized.
    witness_branches: (p+, p'+) for one parameter set.
    witness_oracle: |p+ - p'+| for one parameter set.
    steering_branches: The four Alice-outcome branches for one parameter set.
    steering_oracle: S2 assembled from the four branches.
"""
from dataclasses import dataclass

import numpy as np

from driven_qubit.oracle.integrator import (
    IDENTITY,
    PROJECTOR_PLUS,
    SIGMA_X,
    SIGMA_Y,
    IntegratorConfig,
    expectations,
    measure_x,
    propagate,
)
from driven_qubit.validators import validate_non_negative

# Alice measures sigma_x or sigma_y on I / 2; Bob later measures the same observable.
STEERING_OBSERVABLES = (("x", SIGMA_X), ("y", SIGMA_Y))
OUTCOMES = (1, -1)


@dataclass(frozen=True)
class SteeringBranch:
    """
    One post-measurement branch of the steering protocol.

    Attributes:
        basis (str): Observable measured by Alice and Bob, "x" or "y".
        outcome (int): Alice's outcome, +1 or -1.
        probability (float): Probability of Alice's outcome.
        squared_expectation (float): <B>^2 at the final time conditioned on the outcome.
    """
    basis: str
    outcome: int
    probability: float
    squared_expectation: float


def _as_samples(*values):
    arrays = np.broadcast_arrays(*(np.atleast_1d(np.asarray(value, dtype=float)) for value in values))

    return [np.ascontiguousarray(array) for array in arrays]


def witness_probabilities(tau, delta, omega0, gamma, config=None):
    """
    Probability of |+> at tau starting from |+>, without and with a sigma_x measurement at tau / 2.

    Both branches share the evolution up to tau / 2; the measured branch is dephased there and
    both are carried on to tau in one integration.

    Args:
        tau, delta, omega0, gamma: Scalars or broadcastable arrays of samples.
        config (IntegratorConfig): Step settings, defaults to the Django settings.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray]: (p_plus, p_plus_measured), one entry per sample.
    """
    config = config or IntegratorConfig.from_settings()
    tau, delta, omega0, gamma = _as_samples(tau, delta, omega0, gamma)
    size = tau.size
    start = np.broadcast_to(PROJECTOR_PLUS, (size, 2, 2))
    middle = propagate(start, np.zeros(size), tau / 2, delta, omega0, gamma, config)
    branches = np.concatenate([middle, measure_x(middle)])
    final = propagate(
        branches,
        np.tile(tau / 2, 2),
        np.tile(tau, 2),
        np.tile(delta, 2),
        np.tile(omega0, 2),
        np.tile(gamma, 2),
        config,
    )
    probabilities = expectations(PROJECTOR_PLUS, final)

    return probabilities[:size], probabilities[size:]


def steering_contributions(tau, delta, omega0, gamma, config=None):
    """
    Squared conditional expectations of the four steering branches.

    Starting from the maximally mixed state, Alice's projective measurement of sigma_x or sigma_y
    prepares one of |+>, |->, |phi+>, |phi->. Every post-measurement state is evolved to tau and
    Bob measures the observable Alice measured.

    Returns:
        tuple[list, numpy.ndarray, numpy.ndarray]: Branch labels (basis, outcome), the outcome
            probabilities with shape (4,) and the squared expectations with shape (4, n).
    """
    config = config or IntegratorConfig.from_settings()
    tau, delta, omega0, gamma = _as_samples(tau, delta, omega0, gamma)
    size = tau.size
    mixed = IDENTITY / 2
    labels, probabilities, states, observables = [], [], [], []

    for basis, observable in STEERING_OBSERVABLES:
        for outcome in OUTCOMES:
            projector = (IDENTITY + outcome * observable) / 2
            probability = float(np.real(np.trace(projector @ mixed)))
            labels.append((basis, outcome))
            probabilities.append(probability)
            states.append(projector @ mixed @ projector / probability)
            observables.append(observable)

    count = len(states)
    start = np.repeat(np.array(states), size, axis=0)
    final = propagate(
        start,
        np.zeros(count * size),
        np.tile(tau, count),
        np.tile(delta, count),
        np.tile(omega0, count),
        np.tile(gamma, count),
        config,
    ).reshape(count, size, 2, 2)
    squared = np.array([
        expectations(observable, final[index]) ** 2 for index, observable in enumerate(observables)
    ])

    return labels, np.array(probabilities), squared


def steering_values_oracle(tau, delta, omega0, gamma, config=None):
    """S2 for every sample: sum over bases and Alice outcomes of P(a) <B>^2."""
    _, probabilities, squared = steering_contributions(tau, delta, omega0, gamma, config)

    return probabilities @ squared


def witness_branches(tau, drive, noise, config=None):
    """
    The two witness branches for one parameter set.

    Returns:
        tuple[float, float]: (p_plus, p_plus_measured).
    """
    validate_non_negative(tau, "tau")
    unmeasured, measured = witness_probabilities(tau, drive.delta, drive.omega0, noise.gamma, config)

    return float(unmeasured[0]), float(measured[0])


def witness_oracle(tau, drive, noise, config=None):
    """
    Quantum witness |p+(tau) - p'+(tau)| obtained by simulating the protocol.

    Raises:
        IntegrationBudgetExceeded: If the integrator budget is too small for tau.

    Returns:
        float: A value in [0, 1/2].
    """
    unmeasured, measured = witness_branches(tau, drive, noise, config)

    return abs(unmeasured - measured)


def steering_branches(tau, drive, noise, config=None):
    """
    The four Alice-outcome branches of the steering protocol for one parameter set.

    Returns:
        list[SteeringBranch]: Branches ordered x+, x-, y+, y-.
    """
    validate_non_negative(tau, "tau")
    labels, probabilities, squared = steering_contributions(
        tau, drive.delta, drive.omega0, noise.gamma, config,
    )

    return [
        SteeringBranch(basis, outcome, float(probability), float(value[0]))
        for (basis, outcome), probability, value in zip(labels, probabilities, squared)
    ]


def steering_oracle(tau, drive, noise, config=None):
    """
    Temporal steering parameter S2 obtained by simulating the protocol.

    Returns:
        float: A value in [0, 2].
    """
    branches = steering_branches(tau, drive, noise, config)

    return sum(branch.probability * branch.squared_expectation for branch in branches)
