"""
Console entry point ``driven-qubit``.

It restricts Django's command runner to the five driven_qubit commands and turns every outcome
into a process return code.
"""
import os
import sys

from driven_qubit.constants import EXIT_USAGE

SUBCOMMANDS = ("trace", "grid", "extrema", "tailor", "verify")
PROG = "driven-qubit"
USAGE = f"usage: {PROG} {{{','.join(SUBCOMMANDS)}}} [options]\n"


def run(argv=None):
    """
    Execute one subcommand.

    Args:
        argv (list[str]): Arguments without the program name, sys.argv[1:] by default.

    Returns:
        int: 0 on success, 1 on usage errors, 2 on numerical failures and 3 on I/O errors.
    """
    argv = list(sys.argv[1:] if argv is None else argv)

    if argv and argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE)
        return 0
    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(USAGE)
        sys.stderr.write(f"{PROG}: error: expected one of {', '.join(SUBCOMMANDS)}\n")
        return EXIT_USAGE

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "driven_qubit.settings.common")

    from django.core.management import execute_from_command_line  # pylint: disable=import-outside-toplevel

    try:
        execute_from_command_line([PROG, *argv])
    except SystemExit as exit_:
        if exit_.code is None:
            return 0
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE

    return 0


def main():
    sys.exit(run())
