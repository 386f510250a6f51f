"""This file contains test cases for the command `verify`.

TestCases:
- VerifyCommandTestCase
"""
import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from driven_qubit.constants import EXIT_NUMERICAL, EXIT_USAGE


class VerifyCommandTestCase(SimpleTestCase):
    """Test `verify` management command."""

    def test_passes(self):
        """
        Test a small verification with the default step.

        Expected behavior:
        - The report is printed and passed is true.
        """
        stdout = StringIO()

        call_command("verify", "--samples", "5", "--seed", "7", stdout=stdout)

        document = json.loads(stdout.getvalue())
        self.assertTrue(document["passed"])
        self.assertEqual((5, 7), (document["samples"], document["seed"]))

    def test_fails_with_coarse_step(self):
        """
        Test a verification integrated with a step of 0.5.

        Expected behavior:
        - The report is still printed.
        - CommandError with return code 2 is raised.
        """
        stdout = StringIO()

        with self.assertRaises(CommandError) as context:
            call_command("verify", "--samples", "5", "--step", "0.5", stdout=stdout)

        self.assertEqual(EXIT_NUMERICAL, context.exception.returncode)
        self.assertFalse(json.loads(stdout.getvalue())["passed"])

    def test_invalid_samples(self):
        """
        Test zero samples.

        Expected behavior:
        - CommandError with return code 1 is raised.
        """
        with self.assertRaises(CommandError) as context:
            call_command("verify", "--samples", "0", stdout=StringIO())

        self.assertEqual(EXIT_USAGE, context.exception.returncode)
