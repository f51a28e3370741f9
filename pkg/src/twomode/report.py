"""Closeness tables for one side of a two-mode network."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass

from .edgelist import TwoModeEdgeList, read_two_mode
from .graph import A0, A1, CentralityReport, centrality_report, to_decimal

PART_NAMES = {A0: "left", A1: "right"}
PART_CODES = {"left": A0, "right": A1}
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class RenderedReport:
    format: str
    precision: int
    part: str
    rows: tuple[int, ...]
    argmax: tuple[int, ...]
    report: CentralityReport
    text: str


def _ordered(rep: CentralityReport, nodes: list[int]) -> list[int]:
    # descending C1; ties keep input order, which is how published tables list them
    return sorted(nodes, key=lambda v: (-rep.C1[v], v))


def _table(rep: CentralityReport, rows, precision: int) -> str:
    header = ("node", "W", "C", "C1")
    body = [(rep.labels[v], str(rep.W[v]), to_decimal(rep.C[v], precision),
             to_decimal(rep.C1[v], precision)) for v in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(4)]
    lines = ["  ".join([header[0].ljust(widths[0])] + [h.rjust(w) for h, w in zip(header[1:], widths[1:])])]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]))
    return "".join(line.rstrip() + "\n" for line in lines)


def _csv(rep: CentralityReport, rows, precision: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "part", "W", "C", "C1"])
    for v in rows:
        writer.writerow([rep.labels[v], PART_NAMES[rep.part[v]], rep.W[v],
                         to_decimal(rep.C[v], precision), to_decimal(rep.C1[v], precision)])
    return buf.getvalue()


def _json(rep: CentralityReport, rows, argmax, precision: int) -> str:
    def frac(x):
        return {"num": x.numerator, "den": x.denominator}

    doc = {
        "nodes": [{
            "label": rep.labels[v],
            "part": PART_NAMES[rep.part[v]],
            "W": rep.W[v],
            "C": frac(rep.C[v]),
            "C1": frac(rep.C1[v]),
            "C_dec": to_decimal(rep.C[v], precision),
            "C1_dec": to_decimal(rep.C1[v], precision),
        } for v in rows],
        "argmax": [rep.labels[v] for v in argmax],
    }
    return json.dumps(doc, indent=2) + "\n"


def analyze(source: str | os.PathLike | TwoModeEdgeList, part: str = "left",
            format: str = "table", precision: int = 5) -> RenderedReport:
    """Closeness ``C`` and centralization ``C1`` for every node of ``part``.

    ``C1`` is computed over the whole network; only the rows shown are
    restricted to one side.
    """
    if part not in PART_CODES:
        raise ValueError(f"part must be 'left' or 'right', not {part!r}")
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, not {format!r}")
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    edges = source if isinstance(source, TwoModeEdgeList) else read_two_mode(source)
    bg = edges.to_bipartite()
    rep = centrality_report(bg)
    code = PART_CODES[part]
    rows = _ordered(rep, bg.nodes_in(code))
    argmax, _ = rep.part_argmax(code)
    if format == "table":
        text = _table(rep, rows, precision)
    elif format == "csv":
        text = _csv(rep, rows, precision)
    else:
        text = _json(rep, rows, argmax, precision)
    return RenderedReport(format, precision, part, tuple(rows), argmax, rep, text)
