"""
Management command cross-checking the closed forms against the density-matrix simulation.

Examples:
    driven-qubit verify --samples 200 --seed 7
"""
from django.core.management.base import CommandError

from driven_qubit.constants import EXIT_NUMERICAL
from driven_qubit.management.base import QubitCommand
from driven_qubit.management.serializers import VerificationReportSerializer, VerifySerializer
from driven_qubit.oracle import IntegratorConfig, verify_closed_forms


class Command(QubitCommand):
    """Writes the verification report as JSON and exits with code 2 when a deviation exceeds the tolerance."""

    help = "Compare witness and steering closed forms with the simulated protocols on random parameters"
    input_serializer_class = VerifySerializer

    def add_run_arguments(self, parser):
        parser.add_argument("--samples", type=int, help="Number of random parameter tuples [count] (default: 200)")
        parser.add_argument("--seed", type=int, help="Seed of the parameter sampler [integer] (default: 7)")
        parser.add_argument("--tolerance", type=float, help="Accepted absolute deviation [dimensionless] (default: 1e-6)")
        parser.add_argument("--step", type=float, help="RK4 step of the simulation [time] (default: 1e-3)")

    def compute(self, config):
        params = config.params
        integrator = IntegratorConfig.from_settings()

        if params["step"] is not None:
            integrator = IntegratorConfig(step=params["step"], max_steps=integrator.max_steps)

        report = verify_closed_forms(params["samples"], params["seed"], integrator, params["tolerance"])

        return VerificationReportSerializer(report).data

    def check(self, result):
        if not result["passed"]:
            worst = max(result["worst_witness_deviation"], result["worst_steering_deviation"])
            raise CommandError(
                f"Closed forms deviate from the simulation by {worst:.3e}, above the tolerance {result['tolerance']:.3e}.",
                returncode=EXIT_NUMERICAL,
            )
