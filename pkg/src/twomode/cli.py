"""Command-line entry point: ``twomode <command> ...``.

Exit status is 0 on success, 1 on invalid input and 2 when an exhaustive
verification disagrees with the closed form.
"""

from __future__ import annotations

import argparse
import json
import sys

from .edgelist import emit_extremal, extremal_edge_list, read_two_mode
from .enumeration import (
    EnumerationSpec,
    eigenvector_conjecture_scan,
    verify_bipartite_theorem,
    verify_star_theorem,
)
from .errors import TwoModeError
from .extremal import closed_form_centralization, extremal_params, lower_bound
from .graph import is_tree, to_decimal
from .report import FORMATS, analyze
from .transforms import (
    apply_flatten,
    audit_transform,
    balance_fixpoint,
    bfs_spanning_tree,
    build_flatten_context,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _cmd_analyze(args, out):
    rendered = analyze(args.file, args.part, args.format, args.precision)
    out.write(rendered.text)
    return EXIT_OK


def _cmd_extremal(args, out):
    prm = extremal_params(args.n0, args.n1)
    if args.emit:
        edges = emit_extremal(args.n0, args.n1, args.emit)
        out.write(f"wrote H(0;{args.n0},{args.n1}) to {args.emit}: {len(edges.rows)} edges, "
                  f"root degree {args.n1}, m={prm.m} p={prm.p} r={prm.r}\n")
    else:
        out.write(extremal_edge_list(args.n0, args.n1).format())
    return EXIT_OK


def _cmd_closed_form(args, out):
    value = closed_form_centralization(args.n0, args.n1)
    out.write(f"{value}\t{to_decimal(value, args.precision)}\n")
    return EXIT_OK


def _cmd_bound(args, out):
    value = lower_bound(args.n1)
    out.write(f"{value}\t{to_decimal(value, args.precision)}\n")
    return EXIT_OK


def _write_verification(report, out):
    out.write(json.dumps(report.as_dict(), indent=2) + "\n")
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.verdict == "match" else EXIT_MISMATCH


def _cmd_verify(args, out):
    if args.mode == "star":
        if args.n1 is not None:
            raise TwoModeError("verify star takes a single size N")
        return _write_verification(verify_star_theorem(args.n0, args.jobs), out)
    if args.n1 is None:
        raise TwoModeError(f"verify {args.mode} needs N0 and N1")
    spec = EnumerationSpec(args.n0, args.n1, args.mode, args.jobs)
    return _write_verification(verify_bipartite_theorem(spec), out)


def _cmd_scan(args, out):
    scan = eigenvector_conjecture_scan(EnumerationSpec(args.n0, args.n1, args.mode), args.tol)
    doc = {"exploratory": True, **scan.as_dict()}
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def _cmd_transform(args, out):
    edges = read_two_mode(args.file)
    g = edges.to_bipartite()
    labels = g.graph.labels
    if args.root not in labels:
        raise TwoModeError(f"unknown root label {args.root!r}")
    u = labels.index(args.root)

    def named(graph):
        return [[labels[a], labels[b]] for a, b in graph.edges()]

    steps = []
    if not is_tree(g):
        t = bfs_spanning_tree(g, u)
        steps.append({"step": "bfs_tree", "before": named(g), "after": named(t)})
        g = t
    ctx = build_flatten_context(g, u) if g.graph.degree(u) >= 2 else None
    if ctx is not None:
        after = apply_flatten(g, u, ctx)
        audit = audit_transform(g, after, ctx)

        def names(nodes):
            return sorted(labels[v] for v in nodes)

        steps.append({
            "step": "flatten",
            "case": ctx.case,
            "context": {"z": labels[ctx.z], "w": labels[ctx.w], "y": names(ctx.ys),
                        "Y": names(ctx.Y), "P": names(ctx.P), "Pprime": names(ctx.Pprime),
                        "S": names(ctx.S), "Sprime": names(ctx.Sprime), "R": names(ctx.R)},
            "before": named(g),
            "after": named(after),
            "audit": audit.as_dict(),
        })
    elif set(g.graph.adjacency[u]) == {v for v in range(g.n) if g.part[v] != g.part[u]}:
        balanced, count = balance_fixpoint(g, u)
        steps.append({"step": "balance", "moves": count, "before": named(g), "after": named(balanced)})
    out.write(json.dumps({"root": args.root, "steps": steps}, indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomode",
        description="Closeness centralization on two-mode networks and the extremal tree H(u; n0, n1).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="closeness table for one side of an edge-list file")
    p.add_argument("file")
    p.add_argument("--part", choices=("left", "right"), required=True)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--precision", type=int, default=5)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("extremal", help="edge list of H(0; N0, N1)")
    p.add_argument("n0", type=_positive, metavar="N0")
    p.add_argument("n1", type=_positive, metavar="N1")
    p.add_argument("--emit", metavar="FILE", help="write the edge list to FILE")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("closed-form", help="exact C1 of the root of H(u; N0, N1)")
    p.add_argument("n0", type=_positive, metavar="N0")
    p.add_argument("n1", type=_positive, metavar="N1")
    p.add_argument("--precision", type=int, default=6)
    p.set_defaults(func=_cmd_closed_form)

    p = sub.add_parser("bound", help="lower bound (N1-1)/(2(2N1-1)) on the extremal value")
    p.add_argument("n1", type=_positive, metavar="N1")
    p.add_argument("--precision", type=int, default=6)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="exhaustive check against the closed form")
    p.add_argument("mode", choices=("trees", "graphs", "star"))
    p.add_argument("n0", type=_positive, metavar="N0")
    p.add_argument("n1", type=_positive, metavar="N1", nargs="?")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan-eigenvector", help="exploratory eigenvector-centralization scan")
    p.add_argument("n0", type=_positive, metavar="N0")
    p.add_argument("n1", type=_positive, metavar="N1")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--mode", choices=("trees", "graphs"), default="trees")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("transform", help="(debug) apply the proof rewrites at a root and audit them")
    p.add_argument("file")
    p.add_argument("--root", required=True, metavar="LABEL")
    p.set_defaults(func=_cmd_transform)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (TwoModeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
