"""
Management command choosing the chirp rate that maximizes witness or steering at a chosen time.

Examples:
    driven-qubit tailor --target witness --tau 6.28318530718 --omega0 1 --gamma 0.2 --delta-min 0.5 --delta-max 1.5
    driven-qubit tailor --target steering --tau 4.71238898038 --omega0 1 --gamma 0.06
"""
import logging

from driven_qubit.management.base import QubitCommand
from driven_qubit.management.commands.extrema import add_search_arguments, search_window
from driven_qubit.management.serializers import ExtremaSerializer, TailorResultSerializer
from driven_qubit.solvers import tailor

logger = logging.getLogger(__name__)


class Command(QubitCommand):
    """Writes the tailored chirp rate, the reached value, the bound and every extremum found as JSON."""

    help = "Tailor the chirp rate so the witness or the steering parameter is maximal at --tau"
    input_serializer_class = ExtremaSerializer

    def add_run_arguments(self, parser):
        add_search_arguments(parser)

    def compute(self, config):
        params = config.params
        result = tailor(params["target"], params["tau"], params["omega0"], params["gamma"], search_window(params))
        logger.info("delta_star=%s saturation_ratio=%s", result.delta_star, result.saturation_ratio)

        return TailorResultSerializer(result).data
