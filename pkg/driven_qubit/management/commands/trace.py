"""
Management command evaluating witness or steering along a time axis at fixed chirp rate.

Examples:
    driven-qubit trace --target witness --delta 0 --omega0 1 --gamma 0.1
    driven-qubit trace --target steering --tau-max 10 --format csv --output steering.csv
"""
import logging

import numpy as np

from driven_qubit.constants import EXPORT_FORMATS, TARGETS
from driven_qubit.management.base import QubitCommand
from driven_qubit.management.serializers import TraceSerializer
from driven_qubit.sweep import trace

logger = logging.getLogger(__name__)


class Command(QubitCommand):
    """Writes tau, delta, value and bound for every time of a trace."""

    help = "Evaluate the witness or the steering parameter over time at fixed driving"
    input_serializer_class = TraceSerializer

    def add_run_arguments(self, parser):
        parser.add_argument("--target", choices=TARGETS, help="Quantity to evaluate (default: witness)")
        parser.add_argument("--delta", type=float, help="Chirp rate delta [rad / time^2] (default: 0)")
        parser.add_argument("--omega0", type=float, help="Undriven frequency omega0 [rad / time] (default: 1)")
        parser.add_argument("--gamma", type=float, help="Dephasing rate gamma [1 / time] (default: 0)")
        parser.add_argument("--tau-min", type=float, help="First time [time] (default: 0)")
        parser.add_argument("--tau-max", type=float, help="Last time [time] (default: 15)")
        parser.add_argument("--tau-steps", type=int, help="Number of times, at least 2 (default: 301)")
        parser.add_argument("--format", choices=EXPORT_FORMATS, help="Output format (default: json)")

    def compute(self, config):
        params = config.params
        taus = np.linspace(params["tau_min"], params["tau_max"], params["tau_steps"])
        logger.info("Tracing %s over %s times", params["target"], taus.size)

        return trace(params["target"], taus, params["delta"], params["omega0"], params["gamma"])
