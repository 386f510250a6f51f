"""Randomized cross-check of the closed-form witness and steering against the oracle.

Classes:
    VerificationReport: Worst deviations found over a seeded sample of parameters.

functions:
    sample_parameters: Seeded uniform draw of (tau, delta, omega0, gamma) tuples.
    verify_closed_forms: Compare closed forms and oracle over a seeded sample.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings

from driven_qubit.exceptions import InvalidParameterError
from driven_qubit.oracle.integrator import IntegratorConfig
from driven_qubit.oracle.protocols import steering_values_oracle, witness_probabilities
from driven_qubit.steering.quantities import steering_values
from driven_qubit.validators import validate_positive
from driven_qubit.witness.quantities import witness_values

logger = logging.getLogger(__name__)

TAU_MAX = 15.0
DELTA_RANGE = (-2.0, 2.0)
OMEGA0_RANGE = (0.0, 2.0)
GAMMA_RANGE = (0.0, 0.3)
PARAMETER_NAMES = ("tau", "delta", "omega0", "gamma")


@dataclass(frozen=True)
class VerificationReport:
    """
    Attributes:
        samples (int): Number of parameter tuples checked.
        seed (int): Seed of the sampler.
        tolerance (float): Largest accepted absolute deviation.
        step (float): Oracle RK4 step.
        worst_witness_deviation (float): max |witness_value - witness_oracle|.
        worst_steering_deviation (float): max |steering_value - steering_oracle|.
        worst_witness_case (dict): Parameters of the worst witness sample.
        worst_steering_case (dict): Parameters of the worst steering sample.
    """
    samples: int
    seed: int
    tolerance: float
    step: float
    worst_witness_deviation: float
    worst_steering_deviation: float
    worst_witness_case: dict = field(default_factory=dict)
    worst_steering_case: dict = field(default_factory=dict)

    @property
    def passed(self):
        """True when both worst deviations are within the tolerance."""
        return max(self.worst_witness_deviation, self.worst_steering_deviation) < self.tolerance


def sample_parameters(samples, seed):
    """
    Draw parameter tuples with tau in (0, 15], delta in [-2, 2], omega0 in [0, 2] and gamma in [0, 0.3].

    Returns:
        dict[str, numpy.ndarray]: One array of length `samples` per parameter name.
    """
    if not isinstance(samples, int) or samples < 1:
        raise InvalidParameterError(f"samples must be a positive integer, got {samples!r}.")

    rng = np.random.default_rng(seed)

    return {
        "tau": TAU_MAX - rng.uniform(0.0, TAU_MAX, samples),
        "delta": rng.uniform(*DELTA_RANGE, samples),
        "omega0": rng.uniform(*OMEGA0_RANGE, samples),
        "gamma": rng.uniform(*GAMMA_RANGE, samples),
    }


def _worst(deviations, parameters):
    index = int(np.argmax(deviations))

    return float(deviations[index]), {name: float(parameters[name][index]) for name in PARAMETER_NAMES}


def verify_closed_forms(samples, seed, config=None, tolerance=None):
    """
    Evaluate witness and steering both in closed form and by simulating the protocols.

    Args:
        samples (int): Number of random parameter tuples.
        seed (int): Sampler seed, the same seed always checks the same tuples.
        config (IntegratorConfig): Oracle step settings, defaults to the Django settings.
        tolerance (float): Accepted deviation, defaults to DRIVEN_QUBIT_VERIFY_TOLERANCE.

    Raises:
        IntegrationBudgetExceeded: If the oracle budget cannot cover tau = 15.

    Returns:
        VerificationReport: Worst deviations and where they occur.
    """
    config = config or IntegratorConfig.from_settings()
    tolerance = tolerance if tolerance is not None else getattr(settings, "DRIVEN_QUBIT_VERIFY_TOLERANCE", 1e-6)
    validate_positive(tolerance, "tolerance")
    parameters = sample_parameters(samples, seed)
    tau, delta, omega0, gamma = (parameters[name] for name in PARAMETER_NAMES)

    unmeasured, measured = witness_probabilities(tau, delta, omega0, gamma, config)
    witness_deviations = np.abs(np.abs(unmeasured - measured) - witness_values(tau, delta, omega0, gamma))
    steering_deviations = np.abs(
        steering_values_oracle(tau, delta, omega0, gamma, config) - steering_values(tau, delta, omega0, gamma),
    )
    worst_witness, witness_case = _worst(witness_deviations, parameters)
    worst_steering, steering_case = _worst(steering_deviations, parameters)

    report = VerificationReport(
        samples=samples,
        seed=seed,
        tolerance=tolerance,
        step=config.step,
        worst_witness_deviation=worst_witness,
        worst_steering_deviation=worst_steering,
        worst_witness_case=witness_case,
        worst_steering_case=steering_case,
    )
    log = logger.info if report.passed else logger.warning
    log(
        "Verified %s samples (seed=%s): worst witness deviation %.3e, worst steering deviation %.3e",
        samples, seed, worst_witness, worst_steering,
    )

    return report
