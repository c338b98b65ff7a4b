"""Plain-text formats for graphs, basis lists, point sets and inequality systems.

Graph:        ``n m`` then ``m`` lines ``u v`` (0-based).
Bases:        ``n r k`` then ``k`` lines of ``r`` sorted element labels.
Points:       ``v d`` then ``v`` lines of ``d`` rationals (``p/q`` or integers).
Inequalities: ``f d`` then ``f`` lines ``b a1 ... ad`` meaning ``a . x >= b``.

``#`` starts a comment anywhere on a line; blank lines are ignored.
Writers emit sorted records so output is byte-stable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from .graph import Graph
from .matroid import Matroid

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class _Token(str):
    line: int
    column: int


def _records(text: str) -> Iterator[list[_Token]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = []
        for m in _TOKEN.finditer(body):
            tok = _Token(m.group())
            tok.line, tok.column = lineno, m.start() + 1
            tokens.append(tok)
        if tokens:
            yield tokens


def _int(tok: _Token, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(tok.line, tok.column, f"expected integer {what}, got {tok!r}") from None


def _rational(tok: _Token) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(tok.line, tok.column, f"expected rational number, got {tok!r}") from None


def _header(records: Iterator[list[_Token]], names: tuple[str, ...]) -> list[int]:
    first = next(records, None)
    if first is None:
        raise ParseError(1, 1, f"missing header '{' '.join(names)}'")
    if len(first) != len(names):
        raise ParseError(first[0].line, first[0].column, f"header must be '{' '.join(names)}'")
    values = [_int(t, n) for t, n in zip(first, names)]
    for t, v in zip(first, values):
        if v < 0:
            raise ParseError(t.line, t.column, "header values must be nonnegative")
    return values


def _body(records, count: int, width: int, kind: str, text: str) -> list[list[_Token]]:
    rows = []
    for rec in records:
        if len(rows) == count:
            raise ParseError(rec[0].line, rec[0].column, f"more than {count} {kind} lines")
        if len(rec) != width:
            col = rec[min(width, len(rec) - 1)].column
            raise ParseError(rec[0].line, col, f"expected {width} values per {kind} line, got {len(rec)}")
        rows.append(rec)
    if len(rows) != count:
        end = max(1, len(text.splitlines()))
        raise ParseError(end, 1, f"expected {count} {kind} lines, found {len(rows)}")
    return rows


def parse_graph(text: str) -> Graph:
    records = _records(text)
    n, m = _header(records, ("n", "m"))
    edges = []
    for rec in _body(records, m, 2, "edge", text):
        u, v = _int(rec[0], "node"), _int(rec[1], "node")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            bad = rec[0] if not 0 <= u < n else rec[1]
            raise ParseError(bad.line, bad.column, f"invalid edge {u} {v} for {n} nodes")
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def parse_bases(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Ground size and basis list; call ``validate_matroid`` on the result."""
    records = _records(text)
    n, r, k = _header(records, ("n", "r", "k"))
    if r == 0:
        extra = next(records, None)
        if extra is not None:
            raise ParseError(extra[0].line, extra[0].column, "rank-0 bases file takes no basis lines")
        if k != 1:
            raise ParseError(1, 1, "a rank-0 matroid has exactly one (empty) basis")
        return n, [()]
    bases = []
    for rec in _body(records, k, r, "basis", text):
        labels = [_int(t, "element") for t in rec]
        for t, e in zip(rec, labels):
            if not 1 <= e <= n:
                raise ParseError(t.line, t.column, f"element {e} outside 1..{n}")
        bases.append(tuple(labels))
    return n, bases


def format_bases(m: Matroid) -> str:
    lines = [f"{m.ground_size} {m.rank} {len(m.bases)}"]
    if m.rank:
        lines += [" ".join(map(str, b)) for b in m.bases]
    return "\n".join(lines) + "\n"


def _fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_points(text: str) -> list[tuple[Fraction, ...]]:
    records = _records(text)
    v, d = _header(records, ("v", "d"))
    return [tuple(_rational(t) for t in rec) for rec in _body(records, v, d, "point", text)]


def format_points(points) -> str:
    d = len(points[0]) if points else 0
    lines = [f"{len(points)} {d}"] + [" ".join(_fraction(Fraction(x)) for x in p) for p in points]
    return "\n".join(lines) + "\n"


def parse_inequalities(text: str) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    records = _records(text)
    f, d = _header(records, ("f", "d"))
    rows = _body(records, f, d + 1, "inequality", text)
    return [(_rational(rec[0]), tuple(_rational(t) for t in rec[1:])) for rec in rows]


def format_inequalities(rows) -> str:
    d = len(rows[0][1]) if rows else 0
    lines = [f"{len(rows)} {d}"]
    lines += [" ".join(_fraction(Fraction(x)) for x in (b, *a)) for b, a in rows]
    return "\n".join(lines) + "\n"
