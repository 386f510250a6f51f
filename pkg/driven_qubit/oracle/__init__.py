"""Brute-force verification path: Schrodinger-picture density-matrix integration of the dephasing master equation."""
from driven_qubit.oracle.integrator import (
    DensityMatrix,
    IntegratorConfig,
    integrate,
    l1_coherence,
    lindblad_rhs,
    nonselective_measure_x,
)
from driven_qubit.oracle.protocols import steering_branches, steering_oracle, witness_branches, witness_oracle
from driven_qubit.oracle.verification import VerificationReport, verify_closed_forms

__all__ = [
    "DensityMatrix",
    "IntegratorConfig",
    "VerificationReport",
    "integrate",
    "l1_coherence",
    "lindblad_rhs",
    "nonselective_measure_x",
    "steering_branches",
    "steering_oracle",
    "verify_closed_forms",
    "witness_branches",
    "witness_oracle",
]
