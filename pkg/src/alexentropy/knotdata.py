"""Knot tables: a small built-in table and CSV ingestion.

CSV rows are ``name,c0,c1,...,cn`` with coefficients in ascending degree
(constant term first), matching :class:`~alexentropy.polycore.IntPoly`.  A
header row whose coefficient fields are not integers is skipped.
"""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

from .polycore import IntPoly, normalize, validate_alexander

log = logging.getLogger(__name__)

ROLFSEN = "Rolfsen table"

_BUILTIN = [
    ("0_1", 0, (1,)),
    ("3_1", 3, (1, -1, 1)),
    ("4_1", 4, (1, -3, 1)),
    ("5_1", 5, (1, -1, 1, -1, 1)),
    ("5_2", 5, (2, -3, 2)),
    ("6_1", 6, (2, -5, 2)),
    ("6_2", 6, (1, -3, 3, -3, 1)),
    ("6_3", 6, (1, -3, 5, -3, 1)),
    ("7_2", 7, (3, -5, 3)),
    ("7_4", 7, (4, -7, 4)),
]


class KnotTableError(ValueError):
    """Rejected rows, each as ``(row_number, message)``."""

    def __init__(self, problems):
        self.problems = list(problems)
        lines = "; ".join(f"row {row}: {msg}" for row, msg in self.problems)
        super().__init__(lines or "no records")


@dataclass(frozen=True)
class KnotRecord:
    name: str
    poly: IntPoly
    crossing_number: int | None = None
    source: str = ""


def _crossings_from_name(name: str) -> int | None:
    head = name.split("_", 1)[0]
    return int(head) if head.isdigit() else None


def builtin_table() -> list[KnotRecord]:
    return [KnotRecord(name, IntPoly(c), n, ROLFSEN) for name, n, c in _BUILTIN]


def lookup(name: str, table=None) -> KnotRecord:
    for rec in table if table is not None else builtin_table():
        if rec.name == name:
            return rec
    raise KeyError(f"unknown knot {name!r}")


def _parse_int(text: str) -> int:
    return int(text.strip())


def _is_header(row) -> bool:
    try:
        [_parse_int(x) for x in row[1:]]
    except ValueError:
        return True
    return False


def load_csv(path) -> list[KnotRecord]:
    """Read and validate a knot table; raises :class:`KnotTableError` on any bad row."""
    path = Path(path)
    records: list[KnotRecord] = []
    problems = []
    seen: dict[str, int] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        for rownum, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not x.strip() for x in row):
                continue
            if rownum == 1 and _is_header(row):
                continue
            name = row[0].strip()
            fields = [x for x in row[1:] if x.strip()]
            if not fields:
                problems.append((rownum, f"{name}: empty coefficient list"))
                continue
            try:
                coeffs = [_parse_int(x) for x in fields]
            except ValueError as exc:
                problems.append((rownum, f"{name}: malformed integer ({exc})"))
                continue
            if name in seen:
                problems.append((rownum, f"duplicate name {name!r} (first on row {seen[name]})"))
                continue
            try:
                poly = normalize(coeffs)
            except ValueError as exc:
                problems.append((rownum, f"{name}: {exc}"))
                continue
            report = validate_alexander(poly)
            if not report.is_knot_like:
                problems.append((rownum, f"{name}: rejected, Δ(1)={report.value_at_one}"))
                continue
            for msg in report.messages:
                log.warning("%s row %d (%s): %s", path.name, rownum, name, msg)
            seen[name] = rownum
            records.append(
                KnotRecord(name, poly, _crossings_from_name(name), f"{path.name}:{rownum}")
            )
    if problems:
        raise KnotTableError(problems)
    return records


def write_csv(records, path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        for rec in records:
            w.writerow([rec.name, *rec.poly.coeffs])
