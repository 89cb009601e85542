"""Deterministic CSV/JSON emission for census rows, bound fits, and reports.

Counts are printed as exact decimal integers; reals are rounded to 12
significant digits so reports are byte-identical across runs and diffable.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json


def fmt_real(v: float) -> str:
    return f"{float(v):.12g}"


def round_real(v: float) -> float:
    return float(fmt_real(v))


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt_real(value)
    if isinstance(value, complex):
        return f"{fmt_real(value.real)}{'+' if value.imag >= 0 else '-'}{fmt_real(abs(value.imag))}j"
    if isinstance(value, (tuple, list)):
        return ";".join(_cell(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, float):
        return round_real(value)
    if isinstance(value, complex):
        return {"re": round_real(value.real), "im": round_real(value.imag)}
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if dataclasses.is_dataclass(value):
        return {f.name: _jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    return str(value)


def rows_from_dataclasses(objs) -> tuple[list[str], list[list[str]]]:
    """Header (field names) and formatted cells for a list of dataclasses of
    one type."""
    objs = list(objs)
    if not objs:
        return [], []
    fields = [f.name for f in dataclasses.fields(objs[0])]
    rows = [[_cell(getattr(o, name)) for name in fields] for o in objs]
    return fields, rows


def render_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, sort_keys=False) + "\n"


def emit(objs, fmt: str, out) -> None:
    """Write dataclass rows as CSV or a JSON document to a file object."""
    if fmt == "csv":
        header, rows = rows_from_dataclasses(objs)
        out.write(render_csv(header, rows))
    elif fmt == "json":
        out.write(render_json(list(objs)))
    else:
        raise ValueError(f"unknown output format {fmt!r}")
