"""Reading and writing matrix files.

DM-JSON::

    {"dim": n, "matrix": [[[re, im], ...], ...]}

with exactly ``n`` rows of ``n`` ``[re, im]`` pairs. An optional ``"note"``
string is allowed and ignored by the parser.

DM-CSV: ``n`` lines of ``2n`` comma-separated numbers alternating real and
imaginary parts, no header.

Reduction bundles group several DM-JSON objects in one file, e.g.
``{"kind": "tripartite", "rho12": {...}, "rho23": {...}, "r2": {...}}`` or
``{"kind": "bipartite", "first": {...}, "second": {...}}``.

Floats are written with ``repr``, the shortest decimal string that parses
back to the identical double, so every format round-trips bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError

BUNDLE_KEYS = {
    "tripartite": ("rho12", "rho23", "r2"),
    "bipartite": ("first", "second"),
}


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"{where}: expected a number, got {x!r}")
    if not math.isfinite(x):
        raise ParseError(f"{where}: non-finite value")
    return float(x)


def matrix_from_dm_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "matrix" not in obj:
        raise ParseError('DM-JSON must be an object with "dim" and "matrix"')
    n = obj["dim"]
    rows = obj["matrix"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"bad dim {n!r}")
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"expected {n} rows")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {i + 1}: expected {n} entries")
        for j, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"entry ({i + 1},{j + 1}): expected [re, im]")
            where = f"entry ({i + 1},{j + 1})"
            out[i, j] = complex(_number(pair[0], where), _number(pair[1], where))
    return out


def matrix_to_dm_json(m, note=None) -> dict:
    a = np.asarray(m, dtype=np.complex128)
    obj = {
        "dim": int(a.shape[0]),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }
    if note:
        obj["note"] = note
    return obj


def _render(obj, indent=""):
    """JSON text with one matrix row per line."""
    inner = indent + "  "
    parts = []
    for key, value in obj.items():
        if key == "matrix":
            rows = (",\n" + inner + "  ").join(json.dumps(row) for row in value)
            text = "[\n" + inner + "  " + rows + "\n" + inner + "]"
        elif isinstance(value, dict) and "matrix" in value:
            text = _render(value, inner)
        else:
            text = json.dumps(value)
        parts.append(f"{inner}{json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(parts) + "\n" + indent + "}"


def dumps_dm_json(m, note=None) -> str:
    return _render(matrix_to_dm_json(m, note)) + "\n"


def loads_dm_json(text) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_dm_json(obj)


def dumps_dm_csv(m) -> str:
    a = np.asarray(m, dtype=np.complex128)
    lines = []
    for row in a:
        lines.append(",".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def loads_dm_csv(text) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    n = len(rows)
    if n == 0:
        raise ParseError("empty DM-CSV")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if len(row) != 2 * n:
            raise ParseError(f"line {i + 1}: expected {2 * n} numbers, got {len(row)}")
        try:
            vals = [float(c) for c in row]
        except ValueError as exc:
            raise ParseError(f"line {i + 1}: {exc}") from exc
        if not all(math.isfinite(v) for v in vals):
            raise ParseError(f"line {i + 1}: non-finite value")
        out[i] = np.array(vals[0::2]) + 1j * np.array(vals[1::2])
    return out


def _is_json(path, text):
    if path.suffix.lower() == ".json":
        return True
    if path.suffix.lower() == ".csv":
        return False
    return text.lstrip().startswith("{")


def read_json_object(path):
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc


def read_matrix(path) -> np.ndarray:
    """Load a DM-JSON or DM-CSV file (chosen by suffix, else by content)."""
    path = Path(path)
    text = path.read_text()
    if _is_json(path, text):
        return loads_dm_json(text)
    return loads_dm_csv(text)


def write_matrix(m, path, fmt=None, note=None):
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    path.write_text(dumps_dm_csv(m) if fmt == "csv" else dumps_dm_json(m, note))


def bundle_kind(obj):
    """``"tripartite"``/``"bipartite"`` for bundle objects, ``None`` otherwise."""
    if isinstance(obj, dict) and obj.get("kind") in BUNDLE_KEYS:
        return obj["kind"]
    return None


def read_bundle(obj) -> dict:
    kind = bundle_kind(obj)
    if kind is None:
        raise ParseError("not a reduction bundle")
    missing = [k for k in BUNDLE_KEYS[kind] if k not in obj]
    if missing:
        raise ParseError(f"{kind} bundle lacks {', '.join(missing)}")
    return {k: matrix_from_dm_json(obj[k]) for k in BUNDLE_KEYS[kind]}


def bundle_to_json(kind, matrices: dict, note=None, **meta) -> str:
    obj = {"kind": kind}
    if note:
        obj["note"] = note
    obj.update(meta)
    for key in BUNDLE_KEYS[kind]:
        obj[key] = matrix_to_dm_json(matrices[key])
    return _render(obj) + "\n"
