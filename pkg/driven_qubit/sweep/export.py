"""CSV and JSON serialization of sweeps.

CSV files carry one cell per line under the header ``tau,delta,value,bound`` with 17 significant
digits, so reading them back returns the exact floats. JSON files carry the full sweep description.
"""
import csv
import json
import logging

import numpy as np

from driven_qubit.constants import CSV, EXPORT_FORMATS, JSON
from driven_qubit.exceptions import ExportError, InvalidParameterError

logger = logging.getLogger(__name__)

CSV_HEADER = ("tau", "delta", "value", "bound")


def _exact(value):
    return format(value, ".17g")


def write_csv(result, handle):
    """Write the cells of a SweepGrid or SweepTrace to a text handle."""
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)

    for cell in result.cells():
        writer.writerow([_exact(value) for value in cell])


def write_json(result, handle):
    """Write a SweepGrid or SweepTrace to a text handle as sorted, indented JSON."""
    json.dump(result.as_dict(), handle, indent=2, sort_keys=True)
    handle.write("\n")


WRITERS = {
    CSV: write_csv,
    JSON: write_json,
}


def export(result, fmt, path):
    """
    Write a sweep to a file.

    Args:
        result (SweepGrid | SweepTrace): The evaluated sweep.
        fmt (str): "csv" or "json".
        path (str | pathlib.Path): Destination file.

    Raises:
        InvalidParameterError: If the format is unknown.
        ExportError: If the file cannot be written.
    """
    if fmt not in EXPORT_FORMATS:
        raise InvalidParameterError(f"format must be one of: {', '.join(EXPORT_FORMATS)}, got {fmt!r}.")

    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            WRITERS[fmt](result, handle)
    except OSError as error:
        logger.error("Export to %s failed: %s", path, error)
        raise ExportError(path, error.strerror or str(error)) from error

    logger.info("Exported %s to %s", fmt, path)


def load_csv(path):
    """
    Read a CSV written by `export`.

    Raises:
        ExportError: If the file cannot be read or has an unexpected header.

    Returns:
        numpy.ndarray: Rows of (tau, delta, value, bound), shape (n, 4).
    """
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as error:
        raise ExportError(path, error.strerror or str(error)) from error

    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ExportError(path, f"expected header {','.join(CSV_HEADER)}")

    return np.array([[float(value) for value in row] for row in rows[1:]], dtype=float).reshape(-1, len(CSV_HEADER))
