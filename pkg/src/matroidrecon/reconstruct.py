"""Recover a matroid from an abstract basis exchange graph.

The pipeline: root the neighbourhood of a start node ``v`` as a bipartite
graph, which labels ``v`` and its neighbours; extend the labelling level by
level of distance from ``v``, each new label completing a square whose other
three labels are known; finally check every pair of nodes against the
labels and every distance-two pair against the interval shapes.

Everything after the distance table costs O(n^2) per level, so the total is
O(n^3) on an ``n``-node graph.  Pass a :class:`StepCounter` to
:func:`reconstruct` to count elementary steps.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .graph import (
    UNREACHABLE,
    CNSClass,
    DistanceTable,
    Graph,
    _bits,
    classify_cns,
    common_neighbour_subgraph,
    neighbourhood_subgraph,
)
from .linegraph import NotLineGraph, RootNotBipartite, recognize_root
from .matroid import Matroid


class Reason(str, enum.Enum):
    NOT_CONNECTED = "NotConnected"
    NOT_LINE_GRAPH = "NotLineGraph"
    ROOT_NOT_BIPARTITE = "RootNotBipartite"
    NO_SQUARE_COMPLETION = "NoSquareCompletion"
    UNLABELLED_NODE = "UnlabelledNode"
    DISTANCE_MISMATCH = "DistanceMismatch"
    INTERVAL_VIOLATION = "IntervalViolation"

    def __str__(self):
        return self.value


@dataclass
class StepCounter:
    steps: int = 0

    def add(self, k: int = 1):
        self.steps += k


@dataclass(frozen=True)
class Success:
    matroid: Matroid
    labelling: dict[int, frozenset[int]] = field(hash=False)

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotBEG:
    reason: Reason
    witness: tuple

    def __bool__(self):
        return False


ReconstructionOutcome = Union[Success, NotBEG]


class LabellingFailure(Exception):
    def __init__(self, reason: Reason, witness: tuple):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{reason} at {witness}")


def _mask(label) -> int:
    m = 0
    for e in label:
        m |= 1 << e
    return m


def square_completion(l1, l2, lhat) -> frozenset[int]:
    """Fourth label of a square: ``(l1 & l2) | ((l1 | l2) - lhat)``."""
    l1, l2, lhat = frozenset(l1), frozenset(l2), frozenset(lhat)
    return (l1 & l2) | ((l1 | l2) - lhat)


def _sweep(g: Graph, dist: DistanceTable, v: int, labels: list, counter: StepCounter):
    """Label nodes at distance 2..rank from ``v`` by square completion (masks, in place)."""
    rows = dist.rows
    from_v = rows[v]
    n = g.n
    rank = labels[v].bit_count()
    for j in range(2, rank + 1):
        counter.add(n)
        level = [u for u in range(n) if from_v[u] == j]
        for u in level:
            row_u = rows[u]
            counter.add(n)
            vhat = next((x for x in range(n) if from_v[x] == j - 2 and row_u[x] == 2), None)
            if vhat is None:
                raise LabellingFailure(Reason.NO_SQUARE_COMPLETION, (u,))
            counter.add(n)
            common = list(_bits(g.adj[u] & g.adj[vhat]))
            if len(common) > 4:
                raise LabellingFailure(Reason.INTERVAL_VIOLATION, (u, vhat))
            pair = next(
                ((w1, w2) for w1, w2 in itertools.combinations(common, 2) if not g.has_edge(w1, w2)),
                None,
            )
            if pair is None:
                raise LabellingFailure(Reason.INTERVAL_VIOLATION, (u, vhat))
            l1, l2, lhat = labels[pair[0]], labels[pair[1]], labels[vhat]
            if l1 is None or l2 is None or lhat is None:
                raise LabellingFailure(Reason.NO_SQUARE_COMPLETION, (u, vhat))
            counter.add(n)
            new = (l1 & l2) | ((l1 | l2) & ~lhat)
            if new.bit_count() != rank:
                raise LabellingFailure(Reason.NO_SQUARE_COMPLETION, (u, vhat))
            labels[u] = new
    for u in range(n):
        if labels[u] is None:
            raise LabellingFailure(Reason.UNLABELLED_NODE, (u,))


def extend_labelling(g: Graph, v: int, seed: dict) -> dict[int, frozenset[int]]:
    """Extend labels on ``v`` and its neighbours to the whole graph.

    Raises :class:`LabellingFailure` when the extension gets stuck.
    """
    labels = [None] * g.n
    for u, label in seed.items():
        labels[u] = _mask(label)
    _sweep(g, g.distances(), v, labels, StepCounter())
    return {u: frozenset(_bits(m)) for u, m in enumerate(labels)}


def _first_failure(g: Graph, dist: DistanceTable, labels: list, counter: StepCounter):
    rows = dist.rows
    n = g.n
    rank = labels[0].bit_count()
    for u in range(n):
        if labels[u].bit_count() != rank:
            return Reason.DISTANCE_MISMATCH, (0, u)
    for u in range(n):
        row = rows[u]
        lu = labels[u]
        counter.add(n)
        for w in range(u + 1, n):
            d = row[w]
            if (lu & ~labels[w]).bit_count() != d:
                return Reason.DISTANCE_MISMATCH, (u, w)
            if d == 2:
                counter.add(n)
                sub, _ = common_neighbour_subgraph(g, u, w)
                if classify_cns(sub) is CNSClass.OTHER:
                    return Reason.INTERVAL_VIOLATION, (u, w)
    return None


class LabellingCheck(NamedTuple):
    ok: bool
    pair: tuple[int, int] | None


def verify_labelling(g: Graph, labelling) -> LabellingCheck:
    """All labels of one size, and for every pair ``|l(u) - l(w)| = dist(u, w)``,
    with every distance-two pair spanning a square, pyramid or octahedron."""
    if g.n == 0:
        return LabellingCheck(True, None)
    labels = [_mask(labelling[u]) for u in range(g.n)]
    failure = _first_failure(g, g.distances(), labels, StepCounter())
    if failure is None:
        return LabellingCheck(True, None)
    return LabellingCheck(False, failure[1])


def reconstruct(g: Graph, seed_node: int | None = None, counter: StepCounter | None = None) -> ReconstructionOutcome:
    """Decide whether ``g`` is a basis exchange graph; if so, label it by bases.

    ``seed_node`` picks the start node (default: node 0).  The returned
    matroid lives on a synthetic ground set ``1..k`` and is determined only
    up to isomorphism, duality of components, loops and coloops.
    """
    if counter is None:
        counter = StepCounter()
    n = g.n
    if n == 0:
        return NotBEG(Reason.NOT_CONNECTED, ())
    if n == 1:
        return Success(Matroid(0, [()]), {0: frozenset()})
    dist = g.distances(counter)
    for u, d in enumerate(dist.rows[0]):
        if d == UNREACHABLE:
            return NotBEG(Reason.NOT_CONNECTED, (0, u))

    v = 0 if seed_node is None else seed_node
    if not 0 <= v < n:
        raise ValueError(f"seed node {v} out of range")
    sub, nodes = neighbourhood_subgraph(g, v)
    counter.add(n + sub.n * sub.n)
    try:
        root = recognize_root(sub)
    except NotLineGraph as exc:
        return NotBEG(Reason.NOT_LINE_GRAPH, (v,) + tuple(nodes[i] for i in exc.nodes))
    except RootNotBipartite as exc:
        return NotBEG(Reason.ROOT_NOT_BIPARTITE, (v,) + exc.cycle)

    labels = [None] * n
    b1 = _mask(root.class_a)
    labels[v] = b1
    for i, (e, f) in enumerate(root.phi):
        counter.add(root.node_count)
        labels[nodes[i]] = b1 & ~(1 << e) | 1 << f
    try:
        _sweep(g, dist, v, labels, counter)
    except LabellingFailure as exc:
        return NotBEG(exc.reason, exc.witness)
    failure = _first_failure(g, dist, labels, counter)
    if failure is not None:
        return NotBEG(*failure)
    labelling = {u: frozenset(_bits(m)) for u, m in enumerate(labels)}
    return Success(Matroid(root.node_count, labelling.values()), labelling)


@dataclass(frozen=True)
class MaurerReport:
    connected: bool
    interval: bool
    positioning: bool
    link: bool
    witnesses: dict = field(default_factory=dict, hash=False)

    @property
    def ok(self) -> bool:
        return self.connected and self.interval and self.positioning and self.link


def _induced_squares(g: Graph, dist: DistanceTable):
    """Induced 4-cycles ``(A, C, D, E)`` in cyclic order, each listed once."""
    seen = set()
    for a in range(g.n):
        for d in range(a + 1, g.n):
            if dist.rows[a][d] != 2:
                continue
            common = g.common_neighbours(a, d)
            for c, e in itertools.combinations(common, 2):
                if g.has_edge(c, e):
                    continue
                key = frozenset(((a, d), (c, e)))
                if key not in seen:
                    seen.add(key)
                    yield a, c, d, e


def verify_maurer(g: Graph) -> MaurerReport:
    """Check the interval, positioning and link conditions separately.

    Positioning is checked for every node against every induced square; this
    is a test oracle and runs in O(n^5) worst case.  The link condition is
    checked at node 0.
    """
    if not g.is_connected():
        return MaurerReport(False, False, False, False, {"connected": ()})
    dist = g.distances()
    witnesses = {}
    interval = True
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if dist.rows[u][w] == 2:
                sub, _ = common_neighbour_subgraph(g, u, w)
                if classify_cns(sub) is CNSClass.OTHER:
                    interval = False
                    witnesses["interval"] = (u, w)
                    break
        if not interval:
            break
    positioning = True
    for a, c, d, e in _induced_squares(g, dist):
        for b in range(g.n):
            row = dist.rows[b]
            if row[a] + row[d] != row[c] + row[e]:
                positioning = False
                witnesses["positioning"] = (b, (a, c, d, e))
                break
        if not positioning:
            break
    link = True
    try:
        recognize_root(neighbourhood_subgraph(g, 0)[0])
    except (NotLineGraph, RootNotBipartite) as exc:
        link = False
        witnesses["link"] = (0, str(exc))
    return MaurerReport(True, interval, positioning, link, witnesses)
