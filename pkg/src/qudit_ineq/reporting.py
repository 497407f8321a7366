"""Rendering of inequality reports as text tables, CSV and JSON.

Human tables round to 4 decimals. CSV and JSON carry full precision (``repr``
of each float) and can be parsed back into identical report objects.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json

from .inequalities import SSAReport, SubadditivityReport, SweepRow, SweepTable

SWEEP_COLUMNS = ("s_total", "s_bp1", "s_bp2", "i_bp1", "i_bp2")
SWEEP_HEADERS = ("S_rho", "S_bp1", "S_bp2", "I_bp1", "I_bp2")

REPORT_TYPES = {
    "subadditivity": SubadditivityReport,
    "ssa": SSAReport,
}


def report_kind(report) -> str:
    if isinstance(report, SweepTable):
        return "sweep"
    if isinstance(report, SSAReport):
        return "ssa"
    if isinstance(report, SubadditivityReport):
        return "subadditivity"
    raise TypeError(f"not a report: {type(report).__name__}")


def _plain(value):
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def report_to_dict(report, diagnostics=None) -> dict:
    kind = report_kind(report)
    if kind == "sweep":
        result = {"rows": [dataclasses.asdict(r) for r in report.rows]}
    else:
        result = dataclasses.asdict(report)
    return {"report": kind, "result": _plain(result), "diagnostics": _plain(diagnostics or {})}


def to_json(report, diagnostics=None) -> str:
    return json.dumps(report_to_dict(report, diagnostics), indent=2) + "\n"


def from_json(text):
    """Parse :func:`to_json` output back into ``(report, diagnostics)``."""
    obj = json.loads(text)
    kind = obj["report"]
    result = obj["result"]
    if kind == "sweep":
        report = SweepTable(tuple(SweepRow(**row) for row in result["rows"]))
    else:
        cls = REPORT_TYPES[kind]
        fields = {f.name for f in dataclasses.fields(cls)}
        kwargs = {k: v for k, v in result.items() if k in fields}
        for key in ("clamped", "zero_positions"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        report = cls(**kwargs)
    return report, obj.get("diagnostics", {})


def _fmt(x, places=4):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.{places}f}"
    return str(x)


def sweep_to_table(table: SweepTable) -> str:
    header = ("Zero-row position",) + SWEEP_HEADERS
    rows = [(r.label,) + tuple(_fmt(getattr(r, c)) for c in SWEEP_COLUMNS) for r in table.rows]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in rows)
    return "\n".join(lines) + "\n"


def sweep_to_csv(table: SweepTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("position", "zero_position") + SWEEP_COLUMNS)
    for r in table.rows:
        w.writerow([r.label, r.zero_position] + [repr(getattr(r, c)) for c in SWEEP_COLUMNS])
    return buf.getvalue()


def sweep_from_csv(text) -> SweepTable:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(SweepRow(
            zero_position=int(rec["zero_position"]),
            **{c: float(rec[c]) for c in SWEEP_COLUMNS},
        ))
    return SweepTable(tuple(rows))


def _scalar_fields(report):
    out = []
    for f in dataclasses.fields(report):
        value = getattr(report, f.name)
        if isinstance(value, (dict, tuple)):
            continue
        out.append((f.name, value))
    return out


def report_to_csv(report) -> str:
    if isinstance(report, SweepTable):
        return sweep_to_csv(report)
    fields = _scalar_fields(report)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([name for name, _ in fields])
    w.writerow(["" if v is None else repr(v) if isinstance(v, float) else v for _, v in fields])
    return buf.getvalue()


def subadditivity_to_text(rep: SubadditivityReport) -> str:
    lines = []
    if rep.scheme:
        lines.append(f"scheme         {rep.scheme}")
    if rep.zero_position is not None:
        lines.append(f"zero position  ({rep.zero_position};{rep.zero_position})")
    lines += [
        f"S_rho          {_fmt(rep.s_total)}",
        f"S_first        {_fmt(rep.s_first)}",
        f"S_second       {_fmt(rep.s_second)}",
        f"S_first+S_2nd  {_fmt(rep.s_sum)}",
        f"I              {_fmt(rep.mutual_info)}",
        f"check          {_fmt(rep.s_total)} <= {_fmt(rep.s_sum)}",
        f"verdict        {'HOLDS' if rep.holds else 'VIOLATED'}",
    ]
    return "\n".join(lines) + "\n"


def ssa_to_text(rep: SSAReport) -> str:
    lines = [
        f"mode           {rep.mode}",
        f"S_rho          {_fmt(rep.s_total)}",
        f"S_R2           {_fmt(rep.s_r2)}",
        f"S_rho12        {_fmt(rep.s_12)}",
        f"S_rho23        {_fmt(rep.s_23)}",
        f"lhs            {_fmt(rep.lhs)}",
        f"rhs            {_fmt(rep.rhs)}",
        f"I              {_fmt(rep.mutual_info)}",
    ]
    if rep.lhs is not None:
        lines.append(f"check          {_fmt(rep.lhs)} <= {_fmt(rep.rhs)}")
    traces = ", ".join(f"{k}={v:.4f}" for k, v in rep.reduction_traces.items())
    if traces:
        lines.append(f"traces         {traces}")
    if rep.offending_eigenvalue is not None:
        lines.append(f"min eigenvalue {rep.offending_eigenvalue:.3e}")
    lines.append(f"verdict        {rep.status.upper()}")
    return "\n".join(lines) + "\n"


def render(report, fmt="table", diagnostics=None) -> str:
    if fmt == "json":
        return to_json(report, diagnostics)
    if fmt == "csv":
        return report_to_csv(report)
    if isinstance(report, SweepTable):
        return sweep_to_table(report)
    if isinstance(report, SSAReport):
        return ssa_to_text(report)
    return subadditivity_to_text(report)
