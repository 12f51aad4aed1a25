"""Deterministic JSON and CSV serialization of series, tables and reports."""


from __future__ import annotations

from ..series.zqseries import ZQSeries
from ..series.utils import format_fraction, to_fraction
from ..closedforms.constants import ConstantsTable

from typing import Any, Dict, IO, Iterable, List, Optional, Sequence
from typing_extensions import Literal
import csv
import json


__all__ = ["Format", "series_to_json", "series_from_json", "table_to_json",
    "dump_series", "dump_table", "dump_reports"]


Format = Literal["json", "csv"]

SERIES_FIELDS = ("q", "z", "c")
TABLE_FIELDS = ("family", "i", "j", "value", "provenance")


def series_to_json(s: ZQSeries) -> List[Dict[str, Any]]:
    """Terms as {q, z, c} records sorted by q-exponent, then z-exponents."""

    return [{"q": q, "z": list(zs), "c": format_fraction(c)}
        for (q, zs), c in sorted(s.items())]


def series_from_json(
    data: Sequence[Dict[str, Any]], qmax: int, nz: Optional[int] = None
) -> ZQSeries:
    """
    Inverse of series_to_json.

    :param qmax: Truncation order; records are not self-describing.
    :param nz: z-arity; inferred from the first record when omitted.
    """

    if nz is None:
        nz = len(data[0]["z"]) if data else 0
    m = {}
    for rec in data:
        zs = tuple(int(e) for e in rec["z"])
        if len(zs) != nz:
            raise ValueError(f"Record {rec} does not have {nz} z-exponents.")
        m[(int(rec["q"]), zs)] = to_fraction(rec["c"])
    return ZQSeries(m, qmax=qmax, nz=nz)


def table_to_json(table: ConstantsTable) -> List[Dict[str, Any]]:
    return [dict(zip(TABLE_FIELDS, (f, i, j, format_fraction(v), p)))
        for f, i, j, v, p in table.rows()]


def _write_json(data: Any, f: IO) -> None:
    json.dump(data, f, indent=2)
    f.write("\n")


def _write_csv(fields: Sequence[str], rows: Iterable[Sequence[Any]], f: IO):
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(fields)
    writer.writerows(rows)


def dump_series(s: ZQSeries, f: IO, fmt: Format = "json") -> None:
    """Write s to f; CSV joins z-exponents with spaces."""

    records = series_to_json(s)
    if fmt == "json":
        _write_json(records, f)
    elif fmt == "csv":
        _write_csv(SERIES_FIELDS, ((r["q"], " ".join(map(str, r["z"])),
            r["c"]) for r in records), f)
    else:
        raise ValueError(f"Unknown output format '{fmt}'.")


def dump_table(table: ConstantsTable, f: IO, fmt: Format = "json") -> None:
    records = table_to_json(table)
    if fmt == "json":
        _write_json(records, f)
    elif fmt == "csv":
        _write_csv(TABLE_FIELDS,
            ([r[k] for k in TABLE_FIELDS] for r in records), f)
    else:
        raise ValueError(f"Unknown output format '{fmt}'.")


def dump_reports(reports: Iterable[Any], f: IO) -> None:
    """Write verification reports as a JSON array."""
    _write_json([r.to_json() for r in reports], f)
