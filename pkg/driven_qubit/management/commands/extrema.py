"""
Management command listing the extrema of witness or steering in the chirp rate at a fixed time.

Examples:
    driven-qubit extrema --target witness --tau 6.283185307179586 --omega0 1 --delta-min 0.5 --delta-max 1.5
"""
from dataclasses import replace

from driven_qubit.constants import TARGETS
from driven_qubit.management.base import QubitCommand
from driven_qubit.management.serializers import ExtremaSerializer, ExtremumSolutionSerializer
from driven_qubit.solvers import SearchWindow, find_extrema


def add_search_arguments(parser):
    """Flags shared by `extrema` and `tailor`."""
    parser.add_argument("--target", choices=TARGETS, help="Quantity to extremize (default: witness)")
    parser.add_argument("--tau", type=float, help="Time tau, strictly positive [time] (required)")
    parser.add_argument("--omega0", type=float, help="Undriven frequency omega0 [rad / time] (default: 1)")
    parser.add_argument("--gamma", type=float, help="Dephasing rate gamma [1 / time] (default: 0)")
    parser.add_argument(
        "--delta-min",
        type=float,
        help="Lower end of the search window [rad / time^2] (default: -12 pi / tau^2)",
    )
    parser.add_argument(
        "--delta-max",
        type=float,
        help="Upper end of the search window [rad / time^2] (default: 12 pi / tau^2)",
    )
    parser.add_argument("--scan-points", type=int, help="Scan resolution of the window [count] (default: 2048)")
    parser.add_argument("--root-tol", type=float, help="Bisection tolerance [rad / time^2] (default: 1e-10)")
    parser.add_argument("--max-iterations", type=int, help="Bisection budget per bracket [count] (default: 200)")


def search_window(params):
    """SearchWindow from validated parameters, the default window when no bounds are given."""
    overrides = {
        name: params[name]
        for name in ("scan_points", "root_tol", "max_iterations")
        if params.get(name) is not None
    }

    window = SearchWindow.around(params["tau"], **overrides)

    if params.get("delta_min") is None:
        return window

    return replace(window, delta_min=params["delta_min"], delta_max=params["delta_max"])


class Command(QubitCommand):
    """Writes every classified extremum found in the window as JSON."""

    help = "Locate the extrema of the witness or the steering parameter in the chirp rate"
    input_serializer_class = ExtremaSerializer

    def add_run_arguments(self, parser):
        add_search_arguments(parser)

    def compute(self, config):
        params = config.params
        window = search_window(params)
        solutions = find_extrema(params["target"], params["tau"], params["omega0"], params["gamma"], window)

        return {
            "target": params["target"],
            "tau": params["tau"],
            "omega0": params["omega0"],
            "gamma": params["gamma"],
            "window": [window.delta_min, window.delta_max],
            "extrema": ExtremumSolutionSerializer(solutions, many=True).data,
        }
