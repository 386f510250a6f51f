"""
Management command evaluating witness or steering on a (tau, delta) grid, the data of a density plot.

Examples:
    driven-qubit grid --target witness --omega0 0 --gamma 0.1 --overlay-k-min 0 --overlay-k-max 5
    driven-qubit grid --target steering --omega0 1 --gamma 0.1 --format csv --output steering_grid.csv
"""
from driven_qubit.constants import EXPORT_FORMATS, TARGETS
from driven_qubit.management.base import QubitCommand
from driven_qubit.management.serializers import GridSerializer
from driven_qubit.sweep import GridSpec, grid


class Command(QubitCommand):
    """Writes one cell per (tau, delta) pair, tau outer, with optional maxima overlay curves in JSON."""

    help = "Evaluate the witness or the steering parameter on a (tau, delta) grid"
    input_serializer_class = GridSerializer

    def add_run_arguments(self, parser):
        parser.add_argument("--target", choices=TARGETS, help="Quantity to evaluate (default: witness)")
        parser.add_argument("--tau-min", type=float, help="First time [time] (default: 0.05)")
        parser.add_argument("--tau-max", type=float, help="Last time [time] (default: 15)")
        parser.add_argument("--tau-steps", type=int, help="Number of times, at least 2 (default: 300)")
        parser.add_argument("--delta-min", type=float, help="First chirp rate [rad / time^2] (default: 0)")
        parser.add_argument("--delta-max", type=float, help="Last chirp rate [rad / time^2] (default: 2)")
        parser.add_argument("--delta-steps", type=int, help="Number of chirp rates, at least 2 (default: 300)")
        parser.add_argument("--omega0", type=float, help="Undriven frequency omega0 [rad / time] (default: 1)")
        parser.add_argument("--gamma", type=float, help="Dephasing rate gamma [1 / time] (default: 0)")
        parser.add_argument("--overlay-k-min", type=int, help="Lowest branch index of the maxima overlays [integer]")
        parser.add_argument("--overlay-k-max", type=int, help="Highest branch index of the maxima overlays [integer]")
        parser.add_argument("--format", choices=EXPORT_FORMATS, help="Output format (default: json)")

    def compute(self, config):
        params = dict(config.params)
        k_min, k_max = params.pop("overlay_k_min"), params.pop("overlay_k_max")
        params.pop("format")
        overlay_k = range(k_min, k_max + 1) if k_min is not None else None

        return grid(GridSpec(**params), overlay_k=overlay_k)
