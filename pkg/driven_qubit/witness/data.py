"""Witness records.

Classes:
    WitnessPoint: Probabilities, witness and its coherence bound at one time.
    ExtremumSolution: Stationary point in the chirp rate of the witness or the steering parameter.
"""
from dataclasses import dataclass

from driven_qubit.constants import BRANCH_D0, BRANCH_D1, BRANCH_D2, BRANCH_D3, MAXIMUM, MINIMUM
from driven_qubit.exceptions import InvalidParameterError


@dataclass(frozen=True)
class WitnessPoint:
    """
    Attributes:
        tau (float): Final measurement time.
        p_plus (float): Probability of |+> at tau without intermediate measurement.
        p_plus_measured (float): The same probability with a sigma_x measurement at tau / 2.
        value (float): |p_plus - p_plus_measured|.
        bound (float): Half the l1-norm of coherence, exp(-gamma tau) / 2.
    """
    tau: float
    p_plus: float
    p_plus_measured: float
    value: float
    bound: float


@dataclass(frozen=True)
class ExtremumSolution:
    """
    Attributes:
        delta (float): Chirp rate of the stationary point.
        branch (str): One of D0 (minima), D1, D2, D3.
        k (int): Integer index of the branch.
        kind (str): "maximum" or "minimum".
        value (float): Target value at (tau, delta).
        tau (float): Time at which the target was optimized.
    """
    delta: float
    branch: str
    k: int
    kind: str
    value: float
    tau: float

    def __post_init__(self):
        if self.branch not in (BRANCH_D0, BRANCH_D1, BRANCH_D2, BRANCH_D3):
            raise InvalidParameterError(f"Unknown branch {self.branch!r}.")
        if self.kind not in (MAXIMUM, MINIMUM):
            raise InvalidParameterError(f"Unknown extremum kind {self.kind!r}.")

    @property
    def is_maximum(self):
        """True for maxima."""
        return self.kind == MAXIMUM
