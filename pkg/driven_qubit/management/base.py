"""Shared plumbing of the driven_qubit management commands.

Every command resolves its parameters in the same order: serializer defaults, then the optional
``--config`` file of ``key = value`` lines, then the flags given explicitly. The merged mapping is
validated by the command's input serializer and errors are mapped to exit codes:

    1: usage errors and invalid parameters
    2: numerical failures, including a failed verification
    3: I/O errors
"""
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from driven_qubit.constants import EXIT_IO, EXIT_NUMERICAL, EXIT_USAGE, JSON
from driven_qubit.exceptions import ExportError, InvalidParameterError, NumericalFailure
from driven_qubit.sweep.export import WRITERS, export

logger = logging.getLogger(__name__)

COMMON_OPTIONS = ("config", "output")


def usage_error(parser, message):
    """Replacement for CommandParser.error exiting with EXIT_USAGE instead of argparse's 2."""
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")

    raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


def read_config_file(path):
    """
    Parse a plain-text file of ``key = value`` lines. Blank lines and text after ``#`` are ignored.

    Args:
        path (str): The config file.

    Raises:
        ExportError: If the file cannot be read.
        InvalidParameterError: If a line is not of the form key = value.

    Returns:
        dict[str, str]: Raw values keyed by option name, dashes turned into underscores.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as error:
        raise ExportError(path, error.strerror or str(error)) from error

    values = {}

    for number, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0].strip()

        if not content:
            continue

        key, separator, value = content.partition("=")

        if not separator or not key.strip():
            raise InvalidParameterError(f"{path}:{number}: expected 'key = value', got {line.strip()!r}.")

        values[key.strip().replace("-", "_")] = value.strip()

    return values


def format_errors(detail):
    """Flatten a DRF ValidationError detail into one line."""
    if isinstance(detail, dict):
        return "; ".join(f"{name}: {format_errors(messages)}" for name, messages in detail.items())
    if isinstance(detail, list):
        return " ".join(format_errors(message) for message in detail)

    return str(detail)


@dataclass(frozen=True)
class RunConfig:
    """
    Resolved invocation of a command.

    Attributes:
        params (dict): Validated command parameters.
        output (pathlib.Path | None): Destination file, stdout when None.
        config_path (str | None): The config file that was merged, if any.
    """
    params: dict
    output: Optional[Path] = None
    config_path: Optional[str] = None

    @property
    def format(self):
        return self.params.get("format", JSON)

    @classmethod
    def resolve(cls, options, serializer_class):
        """
        Merge the config file and explicit flags and validate the result.

        Raises:
            InvalidParameterError: On unknown config keys.
            serializers.ValidationError: On invalid parameter values.
        """
        fields = serializer_class().fields
        config_path = options.get("config")
        data = read_config_file(config_path) if config_path else {}
        unknown = sorted(set(data) - set(fields) - set(COMMON_OPTIONS))

        if unknown:
            raise InvalidParameterError(f"Unknown config keys: {', '.join(unknown)}.")

        output = data.pop("output", None)
        data.pop("config", None)
        data.update({name: options[name] for name in fields if options.get(name) is not None})
        output = options.get("output") or output
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)

        return cls(
            params=dict(serializer.validated_data),
            output=resolve_output_path(output) if output else None,
            config_path=config_path,
        )


def resolve_output_path(output):
    """Relative paths are taken from DRIVEN_QUBIT_OUTPUT_DIR."""
    path = Path(output)

    if path.is_absolute():
        return path

    return Path(getattr(settings, "DRIVEN_QUBIT_OUTPUT_DIR", ".")) / path


class QubitCommand(BaseCommand):
    """
    Base class of the driven_qubit commands.

    Subclasses set `input_serializer_class`, declare their flags in `add_run_arguments` and
    return the result of `compute`: a sweep, written as CSV or JSON, or plain data written as JSON.
    """
    requires_system_checks = []
    suppressed_base_arguments = {
        "--version", "--verbosity", "--settings", "--pythonpath", "--traceback",
        "--no-color", "--force-color", "--skip-checks",
    }
    input_serializer_class = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = lambda message: usage_error(parser, message)

        return parser

    def add_arguments(self, parser):
        parser.add_argument(
            "--config",
            help="Plain-text file of 'key = value' lines (# starts a comment); explicit flags override it",
        )
        parser.add_argument(
            "--output",
            help="Destination file, relative to DRIVEN_QUBIT_OUTPUT_DIR unless absolute; stdout when omitted",
        )
        self.add_run_arguments(parser)

    def add_run_arguments(self, parser):
        """Declare the command specific flags, all defaulting to None."""
        raise NotImplementedError

    def compute(self, config):
        """Produce the command result from a resolved RunConfig."""
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = RunConfig.resolve(options, self.input_serializer_class)
            result = self.compute(config)
            self.emit(result, config)
            self.check(result)
        except serializers.ValidationError as error:
            raise CommandError(f"Invalid parameters: {format_errors(error.detail)}", returncode=EXIT_USAGE) from error
        except InvalidParameterError as error:
            raise CommandError(str(error), returncode=EXIT_USAGE) from error
        except ExportError as error:
            raise CommandError(str(error), returncode=EXIT_IO) from error
        except NumericalFailure as error:
            raise CommandError(str(error), returncode=EXIT_NUMERICAL) from error

    def check(self, result):
        """Hook run after the result is written; raise to turn it into a failure exit code."""

    def render(self, result, fmt):
        if hasattr(result, "cells"):
            buffer = io.StringIO()
            WRITERS[fmt](result, buffer)

            return buffer.getvalue()

        return json.dumps(result, indent=2, sort_keys=True) + "\n"

    def emit(self, result, config):
        if config.output is None:
            self.stdout.write(self.render(result, config.format), ending="")
            return

        if hasattr(result, "cells"):
            export(result, config.format, config.output)
            return

        try:
            config.output.write_text(self.render(result, JSON), encoding="utf-8")
        except OSError as error:
            logger.error("Writing %s failed: %s", config.output, error)
            raise ExportError(config.output, error.strerror or str(error)) from error

        logger.info("Wrote %s", config.output)
