"""Closed-form quantum witness of the driven qubit, built on the no-signaling in time condition."""
from driven_qubit.witness.data import ExtremumSolution, WitnessPoint
from driven_qubit.witness.extrema import analytic_extrema_zero_omega, witness_branch_delta
from driven_qubit.witness.quantities import (
    coherence_bound,
    prob_plus_measured,
    prob_plus_unmeasured,
    witness_delta_derivative,
    witness_point,
    witness_value,
)

__all__ = [
    "ExtremumSolution",
    "WitnessPoint",
    "analytic_extrema_zero_omega",
    "coherence_bound",
    "prob_plus_measured",
    "prob_plus_unmeasured",
    "witness_branch_delta",
    "witness_delta_derivative",
    "witness_point",
    "witness_value",
]
