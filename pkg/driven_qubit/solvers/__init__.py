"""Numerical location of witness and steering extrema in the chirp rate, and driving-amplitude tailoring."""
from driven_qubit.solvers.data import SearchWindow, TailorResult
from driven_qubit.solvers.search import find_extrema, tailor

__all__ = [
    "SearchWindow",
    "TailorResult",
    "find_extrema",
    "tailor",
]
