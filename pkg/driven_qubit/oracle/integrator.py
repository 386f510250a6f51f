"""Density-matrix integration of the driven, dephasing qubit.

The state evolves under the Schrodinger-picture dual of the Heisenberg equation,

    d rho / dt = -i [H(t), rho] + (gamma / 2) (sigma_z rho sigma_z - rho),    H(t) = omega(t) sigma_z / 2,

integrated with classical fixed-step RK4. Nothing here uses the closed-form propagator.

Internally every routine works on stacks of matrices with shape (n, 2, 2) and per-row parameter
arrays, so independent branches and samples are integrated in a single sweep.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from driven_qubit.dynamics.data import PauliVector
from driven_qubit.exceptions import IntegrationBudgetExceeded, InvalidParameterError
from driven_qubit.validators import validate_positive, validate_time_order

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PROJECTOR_PLUS = (IDENTITY + SIGMA_X) / 2
PROJECTOR_MINUS = (IDENTITY - SIGMA_X) / 2

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Hermitian, unit-trace, positive 2x2 state.

    Attributes:
        matrix (numpy.ndarray): Read-only complex 2x2 array.
    """
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)

        if matrix.shape != (2, 2):
            raise InvalidParameterError(f"Density matrix must be 2x2, got shape {matrix.shape}.")
        if np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOL:
            raise InvalidParameterError("Density matrix must be Hermitian.")
        if abs(np.trace(matrix) - 1) > TRACE_TOL:
            raise InvalidParameterError(f"Density matrix must have unit trace, got {np.trace(matrix)!r}.")
        if np.min(np.linalg.eigvalsh(matrix)) < -POSITIVITY_SLACK:
            raise InvalidParameterError("Density matrix must be positive semidefinite.")

        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_bloch(cls, state):
        """Build (I + x sigma_x + y sigma_y + z sigma_z) / 2 from a PauliVector."""
        return cls((IDENTITY + state.x * SIGMA_X + state.y * SIGMA_Y + state.z * SIGMA_Z) / 2)

    @classmethod
    def plus(cls):
        """The |+><+| projector."""
        return cls(PROJECTOR_PLUS)

    @classmethod
    def maximally_mixed(cls):
        """The state I / 2."""
        return cls(IDENTITY / 2)

    def expectation(self, observable):
        """Real part of tr(observable rho)."""
        return float(np.real(np.trace(observable @ self.matrix)))

    def bloch(self):
        """Expectation values of the Pauli operators as a PauliVector."""
        return PauliVector(
            self.expectation(SIGMA_X),
            self.expectation(SIGMA_Y),
            self.expectation(SIGMA_Z),
        )


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Fixed-step RK4 settings.

    Attributes:
        step (float): Largest step size; each interval is split into equal steps not longer than it.
        max_steps (int): Budget of steps for a single integration.
    """
    step: float = 1e-3
    max_steps: int = 10_000_000

    def __post_init__(self):
        validate_positive(self.step, "step")

        if not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise InvalidParameterError(f"max_steps must be a positive integer, got {self.max_steps!r}.")

    @classmethod
    def from_settings(cls):
        """Build the configuration from the DRIVEN_QUBIT_ORACLE_* settings."""
        return cls(
            step=getattr(settings, "DRIVEN_QUBIT_ORACLE_STEP", 1e-3),
            max_steps=getattr(settings, "DRIVEN_QUBIT_ORACLE_MAX_STEPS", 10_000_000),
        )

    def steps_for(self, span):
        """Number of equal steps needed to cover a span without exceeding `step`."""
        if span <= 0:
            return 0

        return max(1, math.ceil(span / self.step))


def generator(rhos, t, delta, omega0, gamma):
    """
    Right-hand side of the master equation on a stack of matrices.

    Args:
        rhos (numpy.ndarray): States, shape (n, 2, 2).
        t (numpy.ndarray): Times, shape (n,).
        delta, omega0, gamma (numpy.ndarray): Per-row drive and noise parameters, shape (n,).

    Returns:
        numpy.ndarray: d rho / dt, shape (n, 2, 2).
    """
    omega = (omega0 + delta * t)[:, None, None]
    hamiltonian = 0.5 * omega * SIGMA_Z
    commutator = hamiltonian @ rhos - rhos @ hamiltonian
    dephasing = SIGMA_Z @ rhos @ SIGMA_Z - rhos

    return -1j * commutator + 0.5 * gamma[:, None, None] * dephasing


def propagate(rhos, t0, t1, delta, omega0, gamma, config):
    """
    Integrate a stack of states, each over its own interval, with a common number of RK4 steps.

    The number of steps is fixed by the longest interval so that no row uses a step longer than
    `config.step`. After each step the states are symmetrized and their trace reset to one.

    Raises:
        IntegrationBudgetExceeded: If the step count exceeds `config.max_steps`.

    Returns:
        numpy.ndarray: Final states, shape (n, 2, 2).
    """
    rhos = np.array(rhos, dtype=complex)
    t0, t1, delta, omega0, gamma = (
        np.broadcast_to(np.asarray(value, dtype=float), (rhos.shape[0],))
        for value in (t0, t1, delta, omega0, gamma)
    )
    spans = t1 - t0
    steps = config.steps_for(float(np.max(spans))) if spans.size else 0

    if steps > config.max_steps:
        logger.error("Oracle integration needs %s steps, budget is %s", steps, config.max_steps)
        raise IntegrationBudgetExceeded(steps, config.max_steps)
    if steps == 0:
        return rhos

    h = spans / steps
    half = 0.5 * h
    h_matrix = h[:, None, None]
    t = t0

    for index in range(steps):
        k1 = generator(rhos, t, delta, omega0, gamma)
        k2 = generator(rhos + 0.5 * h_matrix * k1, t + half, delta, omega0, gamma)
        k3 = generator(rhos + 0.5 * h_matrix * k2, t + half, delta, omega0, gamma)
        k4 = generator(rhos + h_matrix * k3, t + h, delta, omega0, gamma)
        rhos = rhos + h_matrix / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        rhos = 0.5 * (rhos + np.conj(np.swapaxes(rhos, 1, 2)))
        rhos = rhos / np.real(np.trace(rhos, axis1=1, axis2=2))[:, None, None]
        t = t0 + (index + 1) * h

    logger.debug("Integrated %s states with %s RK4 steps", rhos.shape[0], steps)

    return rhos


def measure_x(rhos):
    """Nonselective sigma_x measurement on a stack: sum of P rho P over both projectors."""
    return PROJECTOR_PLUS @ rhos @ PROJECTOR_PLUS + PROJECTOR_MINUS @ rhos @ PROJECTOR_MINUS


def expectations(observable, rhos):
    """Real part of tr(observable rho) for every state of a stack."""
    return np.real(np.trace(observable @ rhos, axis1=1, axis2=2))


def lindblad_rhs(rho, t, drive, noise):
    """
    Time derivative of a density matrix under drive and dephasing.

    Args:
        rho (DensityMatrix): Current state.
        t (float): Current time.
        drive (DrivingProtocol): Linear drive.
        noise (NoiseModel): Dephasing.

    Returns:
        numpy.ndarray: Traceless Hermitian 2x2 matrix.
    """
    return generator(
        rho.matrix[None, :, :],
        np.array([t], dtype=float),
        np.array([drive.delta]),
        np.array([drive.omega0]),
        np.array([noise.gamma]),
    )[0]


def integrate(rho0, t0, t1, drive, noise, config=None):
    """
    Integrate a density matrix from t0 to t1 with fixed-step RK4.

    Args:
        rho0 (DensityMatrix): Initial state.
        t0 (float): Start time.
        t1 (float): End time, not before t0.
        drive (DrivingProtocol): Linear drive.
        noise (NoiseModel): Dephasing.
        config (IntegratorConfig): Step settings, defaults to the Django settings.

    Raises:
        IntegrationBudgetExceeded: If the interval needs more than `max_steps` steps.

    Returns:
        DensityMatrix: The state at t1. Global error is O(step^4).
    """
    validate_time_order(t0, t1)
    config = config or IntegratorConfig.from_settings()
    final = propagate(rho0.matrix[None, :, :], t0, t1, drive.delta, drive.omega0, noise.gamma, config)

    return DensityMatrix(final[0])


def nonselective_measure_x(rho):
    """
    Nonselective projective measurement of sigma_x, rho' = P+ rho P+ + P- rho P-.

    Returns:
        DensityMatrix: The dephased state. Applying it twice equals applying it once.
    """
    return DensityMatrix(measure_x(rho.matrix[None, :, :])[0])


def l1_coherence(rho):
    """
    l1-norm of coherence, the sum of the moduli of the off-diagonal entries.

    Returns:
        float: |rho_01| + |rho_10|.
    """
    return float(abs(rho.matrix[0, 1]) + abs(rho.matrix[1, 0]))
