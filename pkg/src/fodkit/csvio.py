"""Long-format CSV output: ``x,series,re,im[,classification]``."""

from __future__ import annotations

import csv
from dataclasses import dataclass

HEADER = ["x", "series", "re", "im"]


@dataclass(frozen=True)
class CsvRecord:
    x: float
    series: str
    re: float
    im: float = 0.0
    classification: str | None = None


def format_float(v: float) -> str:
    # 17 significant digits always round-trip a double
    return format(float(v), ".17g")


def write_records(stream, records, classification: bool | None = None) -> None:
    """Write records to a text stream opened with ``newline=""``.

    The classification column is included when any record carries one,
    unless ``classification`` forces it on or off.
    """
    records = list(records)
    if classification is None:
        classification = any(r.classification is not None for r in records)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(HEADER + (["classification"] if classification else []))
    for r in records:
        row = [format_float(r.x), r.series, format_float(r.re), format_float(r.im)]
        if classification:
            row.append(r.classification or "")
        writer.writerow(row)


def read_records(stream) -> list[CsvRecord]:
    reader = csv.DictReader(stream)
    return [
        CsvRecord(
            float(row["x"]),
            row["series"],
            float(row["re"]),
            float(row["im"]),
            row.get("classification") or None,
        )
        for row in reader
    ]
