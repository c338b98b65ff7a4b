"""Command-line entry point.

Exit codes: 0 success, 1 negative answer (not a basis exchange graph, not
isomorphic, a Maurer condition fails), 2 bad input.  Data goes to stdout,
diagnostics to stderr.  A file argument of ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import is_isomorphic
from .matroid import MatroidError, beg, validate_matroid
from .polytope import (
    PolytopeError,
    cell_census,
    dual_graph,
    facet_enumeration,
    format_census,
    polytope_graph,
    verify_h_representation,
)
from .reconstruct import Success, reconstruct, verify_maurer
from .textio import (
    ParseError,
    format_bases,
    format_graph,
    parse_bases,
    parse_graph,
    parse_inequalities,
    parse_points,
)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(parser, path: str):
    try:
        return parser(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, text: str, payload: dict):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def cmd_reconstruct(args) -> int:
    g = _load(parse_graph, args.graph)
    if args.seed_node is not None and not 0 <= args.seed_node < max(g.n, 1):
        raise InputError(f"--seed-node {args.seed_node} out of range for {g.n} nodes")
    result = reconstruct(g, seed_node=args.seed_node)
    if isinstance(result, Success):
        m = result.matroid
        _emit(args, format_bases(m), {
            "result": True,
            "ground_size": m.ground_size,
            "rank": m.rank,
            "bases": [list(b) for b in m.bases],
            "labelling": {str(u): sorted(l) for u, l in result.labelling.items()},
        })
        return 0
    witness = " ".join(map(str, result.witness))
    _emit(args, f"FALSE {result.reason} {witness}".rstrip() + "\n", {
        "result": False,
        "reason": str(result.reason),
        "witness": list(result.witness),
    })
    return 1


def cmd_beg(args) -> int:
    n, bases = _load(parse_bases, args.bases)
    try:
        m = validate_matroid(n, bases)
    except MatroidError as exc:
        raise InputError(f"{args.bases}: {exc}") from None
    g, _ = beg(m)
    _emit(args, format_graph(g), {"n": g.n, "edges": [list(e) for e in g.edge_list()]})
    return 0


def cmd_polytope_report(args) -> int:
    points = _load(parse_points, args.points)
    if not points:
        raise InputError(f"{args.points}: no points")
    try:
        poly = facet_enumeration(points)
        incidences = None
        if args.inequalities:
            rows = _load(parse_inequalities, args.inequalities)
            incidences = verify_h_representation(points, rows)
    except PolytopeError as exc:
        raise InputError(f"{args.points}: {exc}") from None
    cells = cell_census(poly)
    g, dg = polytope_graph(poly), dual_graph(poly)
    summary = f"dim {poly.dim}, {len(poly.facets)} facets"
    census = format_census(cells)
    if census:
        summary += ", " + census
    lines = [summary, "# facets: b a1 ... ad | incident points"]
    for f in poly.facets:
        lines.append(" ".join(map(str, (f.offset, *f.normal))) + " | " + " ".join(map(str, f.incident)))
    if incidences is not None:
        lines.append("# inequality incidences per point")
        lines += [f"{i} {len(inc)}" for i, inc in enumerate(incidences)]
    lines.append("# graph")
    text = "\n".join(lines) + "\n" + format_graph(g) + "# dual graph\n" + format_graph(dg)
    _emit(args, text, {
        "dim": poly.dim,
        "facets": [{"offset": f.offset, "normal": list(f.normal), "incident": list(f.incident)} for f in poly.facets],
        "cells": [str(c) for c in cells],
        "graph": [list(e) for e in g.edge_list()],
        "dual_graph": [list(e) for e in dg.edge_list()],
        "incidence_counts": None if incidences is None else [len(x) for x in incidences],
    })
    return 0


def cmd_iso(args) -> int:
    g1 = _load(parse_graph, args.first)
    g2 = _load(parse_graph, args.second)
    mapping = is_isomorphic(g1, g2)
    if mapping is None:
        _emit(args, "NOT_ISOMORPHIC\n", {"isomorphic": False})
        return 1
    pairs = sorted(mapping.items())
    _emit(args, "ISOMORPHIC " + " ".join(f"{u}:{x}" for u, x in pairs) + "\n",
          {"isomorphic": True, "mapping": [list(p) for p in pairs]})
    return 0


def cmd_verify_maurer(args) -> int:
    g = _load(parse_graph, args.graph)
    report = verify_maurer(g)
    flags = {
        "connected": report.connected,
        "interval": report.interval,
        "positioning": report.positioning,
        "link": report.link,
    }
    lines = [f"{k} {str(v).lower()}" for k, v in flags.items()]
    for key in sorted(report.witnesses):
        lines.append(f"# {key} witness: {report.witnesses[key]}")
    _emit(args, "\n".join(lines) + "\n", {**flags, "witnesses": {k: str(v) for k, v in report.witnesses.items()}})
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidrecon",
        description="Recognise basis exchange graphs and inspect small rational polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("reconstruct", cmd_reconstruct, "label a graph by matroid bases, or print FALSE")
    p.add_argument("graph")
    p.add_argument("--seed-node", type=int, default=None, help="start node (default 0)")
    p = add("beg", cmd_beg, "basis exchange graph of a bases file")
    p.add_argument("bases")
    p = add("polytope-report", cmd_polytope_report, "facets, cells, graph and dual graph of a point set")
    p.add_argument("points")
    p.add_argument("--inequalities", help="inequality file to check against the points")
    p = add("iso", cmd_iso, "test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p = add("verify-maurer", cmd_verify_maurer, "check the interval, positioning and link conditions")
    p.add_argument("graph")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
