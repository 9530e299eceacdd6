"""JSON and CSV serialisation of tables, sums, matrices and reports."""
from __future__ import annotations

import csv
import io
import json

from .cyclotomic import CycInt
from .sums import SumTable


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def table_csv(table: SumTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["a\\b"] + list(range(table.e)))
    for a in range(table.e):
        w.writerow([a] + [int(x) for x in table.values[a]])
    return buf.getvalue()


def jacobi_json(e: int, i: int, j: int, value: CycInt, provenance: dict) -> dict:
    return {"order": e, "i": i, "j": j, "value": value.to_json(), "provenance": provenance}


def jacobi_csv(rows) -> str:
    """rows: iterable of (i, j, CycInt)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    rows = list(rows)
    n = len(rows[0][2].coeffs) if rows else 0
    w.writerow(["i", "j"] + [f"c{m}" for m in range(n)])
    for i, j, val in rows:
        w.writerow([i, j] + list(val.coeffs))
    return buf.getvalue()
