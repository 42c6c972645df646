"""Serialization of centrality reports.

CSV rows are ``vertex,betweenness,decimal`` where betweenness is the exact
``p/q`` string in lowest terms and decimal is a 12-significant-digit rendering
for human readers only; verification always reconstructs from the exact field.
JSON carries ``{method, graph, values: [{vertex, num, den}]}``.  Uniform
closed-form reports use ``*`` as the vertex of their single row.  Callers may
supply their own vertex labels (coordinate tuples, say); labels containing
commas are quoted by the CSV layer.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .centrality import CentralityReport

UNIFORM_VERTEX = "*"


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if not den:
        raise ValueError(f"expected 'p/q', got {text!r}")
    return Fraction(int(num), int(den))


def decimal_str(value: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _vertex_labels(report: CentralityReport, labels: Sequence[str] | None) -> list[str]:
    if labels is not None:
        if report.uniform:
            raise ValueError("uniform reports carry a single '*' row, not labels")
        if len(labels) != len(report.values):
            raise ValueError(f"{len(labels)} labels for {len(report.values)} values")
        return list(labels)
    if report.uniform:
        return [UNIFORM_VERTEX]
    return [str(i) for i in range(len(report.values))]


def report_to_csv(report: CentralityReport, labels: Sequence[str] | None = None) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["vertex", "betweenness", "decimal"])
    for label, value in zip(_vertex_labels(report, labels), report.values):
        writer.writerow([label, fraction_str(value), decimal_str(value)])
    return out.getvalue()


def values_from_csv(text: str) -> dict[str, Fraction]:
    """Exact values keyed by vertex label; the decimal column is ignored."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows or rows[0][0] != "vertex":
        raise ValueError("missing 'vertex,betweenness,decimal' header")
    values: dict[str, Fraction] = {}
    for row in rows[1:]:
        label, exact, _ = row
        values[label] = parse_fraction(exact)
    return values


def report_to_json(report: CentralityReport, labels: Sequence[str] | None = None) -> str:
    resolved = _vertex_labels(report, labels)
    payload: dict = {
        "method": report.method,
        "graph": report.graph,
        "values": [
            {
                "vertex": label if (report.uniform or labels is not None) else int(label),
                "num": v.numerator,
                "den": v.denominator,
            }
            for label, v in zip(resolved, report.values)
        ],
    }
    if report.uniform:
        payload["uniform"] = True
    return json.dumps(payload, indent=2) + "\n"


def report_from_json(text: str) -> CentralityReport:
    payload = json.loads(text)
    values = tuple(Fraction(entry["num"], entry["den"]) for entry in payload["values"])
    return CentralityReport(
        method=payload["method"],
        graph=payload["graph"],
        values=values,
        uniform=bool(payload.get("uniform", False)),
    )
