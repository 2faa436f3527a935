"""Serialization of metrics rows to CSV and JSON."""
import csv
import json
from typing import Any, Dict, List, Sequence, TextIO

from .. import config
from ..models import MetricsRow, OutputFormat, OutputSpec
from .stream import open_output

COLUMNS: List[str] = ["scheme", "snr_db", "ber", "se", "avg_rounds", "abandon_rate", "frames", "seed"]


def format_float(value: float) -> str:
    """Ten significant digits, shortest form."""
    return format(value, f".{config.FLOAT_DIGITS}g")


def _cells(row: MetricsRow) -> Dict[str, Any]:
    return {
        key: format_float(value) if isinstance(value, float) else value
        for key, value in row.as_record().items()
    }


def write_csv(rows: Sequence[MetricsRow], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_cells(row))


def write_json(rows: Sequence[MetricsRow], fh: TextIO) -> None:
    """Array of objects; floats carry the same rounding as the CSV cells."""
    records = [
        {key: float(cell) if isinstance(value, float) else value
         for (key, cell), value in zip(_cells(row).items(), row.as_record().values())}
        for row in rows
    ]
    json.dump(records, fh, indent=2)
    fh.write("\n")


def write_rows(rows: Sequence[MetricsRow], spec: OutputSpec) -> None:
    """Write rows in grid order to the destination named by `spec`."""
    with open_output(spec) as fh:
        if spec.format is OutputFormat.JSON:
            write_json(rows, fh)
        else:
            write_csv(rows, fh)
