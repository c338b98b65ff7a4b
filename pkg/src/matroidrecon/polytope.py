"""Exact facet enumeration and face-incidence combinatorics for small polytopes.

All arithmetic is exact.  Facets are found by scanning every hyperplane
spanned by ``dim`` affinely independent input points inside their affine
hull and keeping those with all points weakly on one side.  That is
``O(C(v, dim) * v)`` work, fine for the couple of dozen points used here.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .graph import Graph, _bits

Point = tuple[Fraction, ...]


class PolytopeError(ValueError):
    pass


class NotAVertex(PolytopeError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"point {index} is not a vertex of the convex hull")


class HRepresentationError(PolytopeError):
    def __init__(self, message: str, inequality: int, point: int | None = None):
        self.inequality = inequality
        self.point = point
        super().__init__(message)


def as_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def _rank(rows: Sequence[Sequence[Fraction]]) -> tuple[int, list[int]]:
    """Rank and pivot columns of a rational matrix (row reduction)."""
    m = [list(r) for r in rows]
    if not m:
        return 0, []
    width = len(m[0])
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return r, pivots


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; ``-1`` for no points."""
    if not points:
        return -1
    base = points[0]
    diffs = [[Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in points[1:]]
    return _rank(diffs)[0]


def _det(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in matrix]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class Facet:
    """Inequality ``normal . x >= offset`` with primitive integer coefficients."""

    normal: tuple[int, ...]
    offset: int
    incident: tuple[int, ...]


@dataclass(frozen=True)
class IncidencePolytope:
    points: tuple[Point, ...]
    dim: int
    facets: tuple[Facet, ...]

    def facet_masks(self) -> list[int]:
        return [sum(1 << i for i in f.incident) for f in self.facets]

    def point_incidences(self) -> list[tuple[int, ...]]:
        """Facet indices through each point."""
        inc: list[list[int]] = [[] for _ in self.points]
        for k, f in enumerate(self.facets):
            for i in f.incident:
                inc[i].append(k)
        return [tuple(x) for x in inc]


def _primitive(values: list[int]) -> list[int]:
    g = reduce(gcd, (abs(v) for v in values), 0)
    return [v // g for v in values] if g > 1 else values


def facet_enumeration(points: Sequence[Sequence]) -> IncidencePolytope:
    """Facets of the convex hull of ``points`` with vertex-facet incidences.

    Raises :class:`NotAVertex` if some input point is not a vertex.
    """
    pts = tuple(as_point(p) for p in points)
    if not pts:
        raise PolytopeError("no points")
    v = len(pts)
    base = pts[0]
    dim, pivots = _rank([[x - y for x, y in zip(p, base)] for p in pts[1:]])
    # coordinates on the pivot columns are injective on the affine hull
    scale = lcm(*(x.denominator for p in pts for x in p))
    proj = [[int(p[c] * scale) for c in pivots] for p in pts]

    found: dict[int, tuple[list[int], int]] = {}
    masks: list[int] = []
    for subset in itertools.combinations(range(v), dim):
        sub_mask = sum(1 << i for i in subset)
        if any(sub_mask & m == sub_mask for m in masks):
            continue
        rows = [proj[i] + [-1] for i in subset]
        coeffs = []
        for k in range(dim + 1):
            minor = [row[:k] + row[k + 1:] for row in rows]
            coeffs.append((-1) ** k * _det(minor))
        if not any(coeffs[:dim]):
            continue
        normal, rhs = coeffs[:dim], coeffs[dim]
        values = [sum(a * x for a, x in zip(normal, q)) - rhs for q in proj]
        if all(s >= 0 for s in values):
            sign = 1
        elif all(s <= 0 for s in values):
            sign = -1
        else:
            continue
        tight = sum(1 << i for i, s in enumerate(values) if s == 0)
        if tight in found:
            continue
        ambient = [0] * len(base)
        for c, a in zip(pivots, normal):
            ambient[c] = sign * a * scale
        found[tight] = (ambient, sign * rhs)
        masks.append(tight)

    facets = []
    for tight, (ambient, rhs) in found.items():
        coeffs = _primitive(ambient + [rhs])
        facets.append(Facet(tuple(coeffs[:-1]), coeffs[-1], tuple(_bits(tight))))
    facets.sort(key=lambda f: f.incident)
    poly = IncidencePolytope(pts, dim, tuple(facets))
    full = (1 << v) - 1
    fmasks = poly.facet_masks()
    for i in range(v):
        face = full
        for m in fmasks:
            if m >> i & 1:
                face &= m
        if face != 1 << i:
            raise NotAVertex(i)
    return poly


def polytope_graph(p: IncidencePolytope) -> Graph:
    """Vertex-edge graph: ``u, w`` adjacent when the smallest face containing
    both has no other vertex."""
    fmasks = p.facet_masks()
    full = (1 << len(p.points)) - 1
    edges = []
    for u, w in itertools.combinations(range(len(p.points)), 2):
        pair = 1 << u | 1 << w
        face = full
        for m in fmasks:
            if m & pair == pair:
                face &= m
        if face == pair:
            edges.append((u, w))
    return Graph(len(p.points), edges)


def dual_graph(p: IncidencePolytope) -> Graph:
    """Facet adjacency: two facets are adjacent when they share a ridge."""
    fmasks = p.facet_masks()
    edges = []
    for i, j in itertools.combinations(range(len(fmasks)), 2):
        common = [p.points[k] for k in _bits(fmasks[i] & fmasks[j])]
        if affine_dimension(common) == p.dim - 2:
            edges.append((i, j))
    return Graph(len(fmasks), edges)


@dataclass(frozen=True, order=True)
class CellType:
    name: str
    vertex_count: int

    def __str__(self):
        return f"Other({self.vertex_count})" if self.name == "Other" else self.name


TETRAHEDRON = CellType("Tetrahedron", 4)
EGYPTIAN_PYRAMID = CellType("EgyptianPyramid", 5)
OCTAHEDRON = CellType("Octahedron", 6)
TRIANGULAR_PRISM = CellType("TriangularPrism", 6)
CELL_ORDER = (TETRAHEDRON, EGYPTIAN_PYRAMID, OCTAHEDRON, TRIANGULAR_PRISM)


def classify_cell(points: Sequence[Sequence]) -> CellType:
    """Name a 3-polytope by its vertex and edge counts."""
    cell = facet_enumeration(points)
    v = len(cell.points)
    if cell.dim != 3:
        return CellType("Other", v)
    g = polytope_graph(cell)
    e = len(g.edges)
    degrees = sorted(g.degree(x) for x in range(v))
    if (v, e) == (4, 6):
        return TETRAHEDRON
    if (v, e) == (5, 8):
        return EGYPTIAN_PYRAMID
    if (v, e) == (6, 12) and degrees == [4] * 6:
        return OCTAHEDRON
    if (v, e) == (6, 9):
        return TRIANGULAR_PRISM
    return CellType("Other", v)


def cell_census(p: IncidencePolytope) -> list[CellType]:
    """One cell type per facet, in facet order.  Only 4-polytopes have named cells."""
    if p.dim != 4:
        return [CellType("Other", len(f.incident)) for f in p.facets]
    return [classify_cell([p.points[i] for i in f.incident]) for f in p.facets]


def format_census(cells: Iterable[CellType]) -> str:
    counts = Counter(cells)
    named = [c for c in CELL_ORDER if counts[c]]
    others = sorted(c for c in counts if c not in CELL_ORDER)
    return ", ".join(f"{counts[c]} {c}" for c in named + others)


def hypersimplex(r: int, n: int) -> list[Point]:
    """Points of ``{0,1}^n`` with coordinate sum ``r``, in lexicographic order of supports."""
    if not 0 < r < n:
        raise PolytopeError(f"hypersimplex needs 0 < r < n, got r={r}, n={n}")
    one, zero = Fraction(1), Fraction(0)
    return [
        tuple(one if i in support else zero for i in range(n))
        for support in itertools.combinations(range(n), r)
    ]


def replace_point(points: Sequence[Point], index: int, new_point: Sequence) -> list[Point]:
    if not 0 <= index < len(points):
        raise IndexError(f"point index {index} out of range")
    out = [as_point(p) for p in points]
    out[index] = as_point(new_point)
    return out


def verify_h_representation(points: Sequence[Sequence], inequalities: Sequence[tuple]) -> list[tuple[int, ...]]:
    """Check ``a . x >= b`` rows against a point set; return facet incidences per point.

    Each inequality ``(b, a)`` must hold at every point and be tight on a
    point set of affine dimension ``dim - 1``.  Inequalities tight at every
    point are implicit equations and are not counted as facets.
    """
    pts = [as_point(p) for p in points]
    dim = affine_dimension(pts)
    incidences: list[list[int]] = [[] for _ in pts]
    for k, (b, a) in enumerate(inequalities):
        b = Fraction(b)
        a = as_point(a)
        tight = []
        for i, p in enumerate(pts):
            s = sum(x * y for x, y in zip(a, p)) - b
            if s < 0:
                raise HRepresentationError(f"point {i} violates inequality {k}", k, i)
            if s == 0:
                tight.append(i)
        if len(tight) == len(pts):
            continue
        if affine_dimension([pts[i] for i in tight]) != dim - 1:
            raise HRepresentationError(f"inequality {k} does not define a facet", k)
        for i in tight:
            incidences[i].append(k)
    return [tuple(x) for x in incidences]
