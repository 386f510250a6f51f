"""This file contains test cases for the commands `extrema` and `tailor`.

TestCases:
- ExtremaCommandTestCase
- TailorCommandTestCase
"""
import json
import math
import os
import tempfile
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from driven_qubit.constants import EXIT_IO, EXIT_NUMERICAL, EXIT_USAGE
from driven_qubit.exceptions import RootNotConverged

WITNESS_ARGS = ("--target", "witness", "--tau", repr(2 * math.pi), "--omega0", "1", "--gamma", "0.2")
STEERING_ARGS = ("--target", "steering", "--tau", repr(3 * math.pi / 2), "--omega0", "1", "--gamma", "0.06")


def run_command(name, *args):
    stdout = StringIO()
    call_command(name, *args, stdout=stdout)

    return json.loads(stdout.getvalue())


class ExtremaCommandTestCase(SimpleTestCase):
    """Test `extrema` management command."""

    def test_explicit_window(self):
        """
        Test the witness at tau = 2 pi in [0.5, 1.5].

        Expected behavior:
        - The window is echoed and the saturating maximum 3 / pi is listed.
        """
        document = run_command("extrema", *WITNESS_ARGS, "--delta-min", "0.5", "--delta-max", "1.5")
        maxima = [solution for solution in document["extrema"] if solution["kind"] == "maximum"]

        self.assertEqual([0.5, 1.5], document["window"])
        self.assertTrue(any(abs(solution["delta"] - 3 / math.pi) < 1e-8 for solution in maxima))

    def test_default_window(self):
        """
        Test the default window.

        Expected behavior:
        - It spans +-12 pi / tau^2.
        """
        document = run_command("extrema", *STEERING_ARGS)

        self.assertAlmostEqual(16 / (3 * math.pi), document["window"][1], places=12)
        self.assertAlmostEqual(-16 / (3 * math.pi), document["window"][0], places=12)

    def test_missing_tau(self):
        """
        Test a call without --tau.

        Expected behavior:
        - CommandError with return code 1 is raised.
        """
        with self.assertRaises(CommandError) as context:
            run_command("extrema", "--target", "witness")

        self.assertEqual(EXIT_USAGE, context.exception.returncode)

    def test_half_window(self):
        """
        Test a window with only its lower end.

        Expected behavior:
        - CommandError with return code 1 is raised.
        """
        with self.assertRaises(CommandError) as context:
            run_command("extrema", *WITNESS_ARGS, "--delta-min", "0.5")

        self.assertEqual(EXIT_USAGE, context.exception.returncode)


class TailorCommandTestCase(SimpleTestCase):
    """Test `tailor` management command."""

    def setUp(self):
        """Create a scratch directory for config and output files."""
        self.directory = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        self.addCleanup(self.directory.cleanup)

    def write_config(self, content):
        path = os.path.join(self.directory.name, "tailor.conf")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(content)

        return path

    def test_steering_tailoring(self):
        """
        Test steering at tau = 3 pi / 2 with omega0 = 1 and gamma = 0.06.

        Expected behavior:
        - delta_star = 4 / (9 pi) and the target exceeds the classical bound 1.
        """
        document = run_command("tailor", *STEERING_ARGS)

        self.assertAlmostEqual(4 / (9 * math.pi), document["delta_star"], delta=1e-8)
        self.assertGreater(document["target_value"], 1.0)
        self.assertAlmostEqual(1.0, document["saturation_ratio"], delta=1e-9)
        self.assertTrue(document["all_extrema"])

    def test_witness_tailoring_window(self):
        """
        Test the witness at tau = 2 pi with omega0 = 1 and gamma = 0.2 in [0.5, 1.5].

        Expected behavior:
        - delta_star = 3 / pi and the bound exp(-gamma tau) / 2 is reached.
        """
        document = run_command("tailor", *WITNESS_ARGS, "--delta-min", "0.5", "--delta-max", "1.5")

        self.assertAlmostEqual(3 / math.pi, document["delta_star"], delta=1e-8)
        self.assertAlmostEqual(math.exp(-0.2 * 2 * math.pi) / 2, document["target_value"], delta=1e-9)
        self.assertAlmostEqual(1.0, document["saturation_ratio"], delta=1e-9)

    def test_witness_tailoring_default_window(self):
        """
        Test the witness at tau = 2 pi without an explicit window.

        Expected behavior:
        - 1 / pi, -1 / pi and 3 / pi all reach the bound.
        - The tie goes to the smallest |delta|, so delta_star = 1 / pi.
        """
        document = run_command("tailor", *WITNESS_ARGS)
        saturating = [
            solution["delta"] for solution in document["all_extrema"]
            if solution["kind"] == "maximum" and abs(solution["value"] - document["bound_value"]) < 1e-10
        ]

        self.assertAlmostEqual(1 / math.pi, document["delta_star"], delta=1e-8)
        self.assertAlmostEqual(1.0, document["saturation_ratio"], delta=1e-9)
        self.assertTrue(any(abs(delta + 1 / math.pi) < 1e-8 for delta in saturating))
        self.assertTrue(any(abs(delta - 3 / math.pi) < 1e-8 for delta in saturating))

    def test_config_only(self):
        """
        Test a run configured by file only.

        Expected behavior:
        - The file parameters are used.
        """
        path = self.write_config(
            f"target = witness\ntau = {2 * math.pi!r}\nomega0 = 1\ngamma = 0.2\ndelta-min = 0.5\ndelta-max = 1.5\n",
        )

        document = run_command("tailor", "--config", path)

        self.assertAlmostEqual(3 / math.pi, document["delta_star"], delta=1e-8)

    def test_unknown_config_key(self):
        """
        Test a config file with a key no flag knows.

        Expected behavior:
        - CommandError with return code 1 is raised.
        """
        path = self.write_config("tau = 1\ncolour = blue\n")

        with self.assertRaises(CommandError) as context:
            run_command("tailor", "--config", path)

        self.assertEqual(EXIT_USAGE, context.exception.returncode)
        self.assertIn("colour", str(context.exception))

    def test_missing_config(self):
        """
        Test a config path that does not exist.

        Expected behavior:
        - CommandError with return code 3 is raised.
        """
        with self.assertRaises(CommandError) as context:
            run_command("tailor", "--config", os.path.join(self.directory.name, "absent.conf"))

        self.assertEqual(EXIT_IO, context.exception.returncode)

    def test_no_maximum(self):
        """
        Test a window without maximum.

        Expected behavior:
        - CommandError with return code 2 is raised.
        """
        with self.assertRaises(CommandError) as context:
            run_command("tailor", *STEERING_ARGS, "--delta-min", "0.01", "--delta-max", "0.02")

        self.assertEqual(EXIT_NUMERICAL, context.exception.returncode)

    @patch("driven_qubit.management.commands.tailor.tailor")
    def test_root_not_converged(self, tailor_mock):
        """
        Test a bisection failure inside the solver.

        Expected behavior:
        - CommandError with return code 2 is raised.
        """
        tailor_mock.side_effect = RootNotConverged((0.0, 0.1), 3)

        with self.assertRaises(CommandError) as context:
            run_command("tailor", *STEERING_ARGS)

        self.assertEqual(EXIT_NUMERICAL, context.exception.returncode)

    def test_output_file(self):
        """
        Test writing the result to a file.

        Expected behavior:
        - The JSON document is written to the path.
        """
        path = os.path.join(self.directory.name, "tailor.json")
        stdout = StringIO()

        call_command("tailor", *STEERING_ARGS, "--output", path, stdout=stdout)

        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
        self.assertEqual("", stdout.getvalue())
        self.assertEqual("steering", document["target"])
