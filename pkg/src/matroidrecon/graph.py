"""Finite simple undirected graphs on nodes ``0..n-1``.

Adjacency is held as one Python ``int`` bit-row per node, so a row scan is a
single big-integer operation.  Graphs are immutable by convention; the
all-pairs distance table is computed on first request and cached.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with dense bit-row adjacency."""

    __slots__ = ("n", "edges", "adj", "_dist")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative node count {n}")
        adj = [0] * n
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            normalized.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(normalized)
        self.adj = tuple(adj)
        self._dist = None

    def __repr__(self):
        return f"Graph({self.n}, {self.edge_list()})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def common_neighbours(self, u: int, v: int) -> list[int]:
        return list(_bits(self.adj[u] & self.adj[v]))

    def distances(self, counter=None) -> "DistanceTable":
        """All-pairs distances, computed once per graph and cached."""
        if self._dist is None:
            self._dist = DistanceTable(self, counter)
        return self._dist

    def bfs_levels(self, source: int) -> list[int]:
        """Hop distance from ``source`` to every node (``UNREACHABLE`` if none)."""
        return _bfs(self.adj, source)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp_mask = 1 << s
            frontier = comp_mask
            while frontier:
                nxt = 0
                for x in _bits(frontier):
                    nxt |= self.adj[x]
                frontier = nxt & ~comp_mask
                comp_mask |= frontier
            seen |= comp_mask
            comps.append(list(_bits(comp_mask)))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced_subgraph(self, nodes: Sequence[int]) -> "Graph":
        """Induced subgraph; node ``i`` of the result is ``nodes[i]``."""
        index = {v: i for i, v in enumerate(nodes)}
        edges = []
        for i, v in enumerate(nodes):
            for w in _bits(self.adj[v]):
                j = index.get(w)
                if j is not None and i < j:
                    edges.append((i, j))
        return Graph(len(nodes), edges)


def _bfs(adj: Sequence[int], source: int, counter=None) -> list[int]:
    n = len(adj)
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    unseen = ((1 << n) - 1) ^ (1 << source)
    while queue:
        x = queue.popleft()
        if counter is not None:
            counter.add(n)  # one adjacency-matrix row scan
        fresh = adj[x] & unseen
        unseen ^= fresh
        d = dist[x] + 1
        for y in _bits(fresh):
            dist[y] = d
            queue.append(y)
    return dist


class DistanceTable:
    """All-pairs hop distances; ``UNREACHABLE`` marks disconnected pairs."""

    __slots__ = ("rows",)

    def __init__(self, g: Graph, counter=None):
        self.rows = [_bfs(g.adj, s, counter) for s in range(g.n)]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return self.rows[u][v]

    def __len__(self):
        return len(self.rows)

    def at_distance(self, u: int, d: int) -> list[int]:
        return [w for w, dw in enumerate(self.rows[u]) if dw == d]


def build_graph(node_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    return Graph(node_count, edge_list)


def all_pairs_distances(g: Graph) -> DistanceTable:
    return g.distances()


def neighbourhood_subgraph(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the neighbours of ``v`` plus the map back to ``g``."""
    if not 0 <= v < g.n:
        raise GraphError(f"node {v} out of range")
    nodes = g.neighbours(v)
    return g.induced_subgraph(nodes), nodes


def common_neighbour_subgraph(g: Graph, u: int, w: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``u``, ``w`` and their common neighbours.

    ``u`` and ``w`` must be at distance two.  Node 0 of the result is ``u``
    and node 1 is ``w``.
    """
    if g.has_edge(u, w) or u == w or not (g.adj[u] & g.adj[w]):
        raise GraphError(f"nodes {u} and {w} are not at distance two")
    nodes = [u, w] + g.common_neighbours(u, w)
    return g.induced_subgraph(nodes), nodes


class CNSClass(enum.Enum):
    SQUARE = "Square"
    PYRAMID = "Pyramid"
    OCTAHEDRON = "Octahedron"
    OTHER = "Other"


def classify_cns(g: Graph) -> CNSClass:
    degrees = sorted(g.degree(v) for v in range(g.n))
    if g.n == 4 and degrees == [2, 2, 2, 2]:
        return CNSClass.SQUARE
    if g.n == 5 and degrees == [3, 3, 3, 3, 4]:
        # complement degrees 1,1,1,1,0: two disjoint non-edges under one apex
        return CNSClass.PYRAMID
    if g.n == 6 and degrees == [4] * 6:
        return CNSClass.OCTAHEDRON
    return CNSClass.OTHER


def _invariants(g: Graph) -> list[tuple]:
    rows = g.distances().rows
    return [(g.degree(v), tuple(sorted(rows[v]))) for v in range(g.n)]


def _search_order(g: Graph, inv: list[tuple]) -> list[int]:
    """Nodes in an order where each one (after a component's first) has an
    already placed neighbour; components start at their rarest invariant."""
    freq: dict[tuple, int] = {}
    for x in inv:
        freq[x] = freq.get(x, 0) + 1
    order = []
    placed = [False] * g.n
    for comp in sorted(g.components(), key=lambda c: (-len(c), c[0])):
        start = min(comp, key=lambda v: (freq[inv[v]], inv[v], v))
        placed[start] = True
        order.append(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbours(x):
                if not placed[y]:
                    placed[y] = True
                    order.append(y)
                    queue.append(y)
    return order


def is_isomorphic(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """Return a node bijection ``g1 -> g2`` preserving adjacency, or ``None``.

    Backtracking over a BFS order of ``g1``; candidates must agree on degree,
    sorted distance row, and distance to every node already mapped.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    inv1, inv2 = _invariants(g1), _invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    if g1.n == 0:
        return {}
    d1, d2 = g1.distances().rows, g2.distances().rows
    by_inv: dict[tuple, list[int]] = {}
    for x in range(g2.n):
        by_inv.setdefault(inv2[x], []).append(x)
    order = _search_order(g1, inv1)
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        row_u = d1[u]
        done = order[:k]
        for x in by_inv[inv1[u]]:
            if used[x]:
                continue
            row_x = d2[x]
            if all(row_u[p] == row_x[mapping[p]] for p in done):
                mapping[u] = x
                used[x] = True
                if extend(k + 1):
                    return True
                used[x] = False
                mapping[u] = -1
        return False

    if not extend(0):
        return None
    return {u: mapping[u] for u in range(g1.n)}


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Node ``(i, j)`` of the product is index ``i * g2.n + j``."""
    n2 = g2.n
    edges = []
    for i in range(g1.n):
        for a, b in g2.edges:
            edges.append((i * n2 + a, i * n2 + b))
    for a, b in g1.edges:
        for j in range(n2):
            edges.append((a * n2 + j, b * n2 + j))
    return Graph(g1.n * n2, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cocktail_party_graph(pairs: int) -> Graph:
    """Complete graph on ``2*pairs`` nodes minus the matching ``{2i, 2i+1}``."""
    n = 2 * pairs
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2])
