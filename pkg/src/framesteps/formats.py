"""JSON and CSV interchange.

Tableau:  ``{"kind": "tableau", "inner": [...], "rows": [[...], ...]}``
GT:       ``{"kind": "gt", "shape": "triangular" | "parallelogram", "rows": [...]}``
Matrix:   ``{"kind": "matrix", "rows": [[...], ...]}`` or plain CSV.

Rows are always listed bottom to top (apex first for GT patterns). Exact
rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .gt import GTPattern
from .tableaux import Tableau


class SchemaError(ValueError):
    """Input does not follow one of the interchange schemas."""


def _number_out(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return int(x)


def _number_in(x):
    if isinstance(x, bool):
        raise SchemaError(f"not a number: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            f = Fraction(x.strip())
        except ValueError as exc:
            raise SchemaError(f"not an exact number: {x!r}") from exc
        return f.numerator if f.denominator == 1 else f
    raise SchemaError(f"exact numbers only (int or \"p/q\"), got {x!r}")


def to_dict(obj) -> dict:
    if isinstance(obj, Tableau):
        d = {"kind": "tableau"}
        if not obj.is_straight:
            d["inner"] = list(obj.inner)
        d["rows"] = [list(r) for r in obj.rows]
        return d
    if isinstance(obj, GTPattern):
        return {"kind": "gt", "shape": obj.kind, "rows": [[_number_out(x) for x in r] for r in obj.rows]}
    if isinstance(obj, np.ndarray):
        return {"kind": "matrix", "rows": obj.tolist()}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), separators=(", ", ": "))


def from_dict(d: dict):
    if not isinstance(d, dict) or "kind" not in d:
        raise SchemaError("expected a JSON object with a \"kind\" field")
    rows = d.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("\"rows\" must be a list of lists")
    kind = d["kind"]
    if kind == "tableau":
        inner = d.get("inner", [])
        if not isinstance(inner, list):
            raise SchemaError("\"inner\" must be a list")
        for x in [*inner, *(x for r in rows for x in r)]:
            if isinstance(x, bool) or not isinstance(x, int):
                raise SchemaError(f"tableau entries must be integers, got {x!r}")
        return Tableau(tuple(tuple(r) for r in rows), tuple(inner))
    if kind == "gt":
        shape = d.get("shape", "triangular")
        if shape not in ("triangular", "parallelogram"):
            raise SchemaError(f"unknown GT shape {shape!r}")
        return GTPattern(tuple(tuple(_number_in(x) for x in r) for r in rows), shape)
    if kind == "matrix":
        try:
            m = np.array(rows, dtype=float)
        except ValueError as exc:
            raise SchemaError(f"matrix rows are ragged or non-numeric: {exc}") from exc
        if m.ndim != 2:
            raise SchemaError("matrix rows are ragged")
        return m
    raise SchemaError(f"unknown kind {kind!r}")


def loads(text: str):
    try:
        return from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from exc


def load(path: str | Path):
    return loads(Path(path).read_text())


def read_matrix(path: str | Path) -> np.ndarray:
    """Read a synthesis matrix from CSV (one frame row per line) or matrix JSON."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        m = loads(text)
        if not isinstance(m, np.ndarray):
            raise SchemaError("expected a matrix object")
        return m
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    try:
        m = np.array([[float(c) for c in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise SchemaError(f"bad CSV matrix: {exc}") from exc
    if m.ndim != 2:
        raise SchemaError("CSV rows have different lengths")
    return m


def matrix_to_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.atleast_2d(m):
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()
