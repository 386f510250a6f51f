"""Batch evaluation of witness and steering over time traces and (tau, delta) grids, with file export."""
from driven_qubit.sweep.data import GridSpec, OverlayCurve, SweepGrid, SweepTrace
from driven_qubit.sweep.evaluation import grid, overlay_extrema, trace
from driven_qubit.sweep.export import export, load_csv, write_csv, write_json

__all__ = [
    "GridSpec",
    "OverlayCurve",
    "SweepGrid",
    "SweepTrace",
    "export",
    "grid",
    "load_csv",
    "overlay_extrema",
    "trace",
    "write_csv",
    "write_json",
]
