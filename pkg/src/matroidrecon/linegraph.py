"""Line graphs, root-graph recognition and bipartite two-colouring.

A graph ``G`` is a line graph exactly when its edges can be covered by
cliques such that every node lies in at most two of them and every edge in
exactly one; the cliques are the root nodes and each node of ``G`` is the
root edge joining its two cliques.

Recognition seeds the clique structure at the lowest node ``v0`` of each
component: ``N(v0)`` must split into two cliques whose cross edges form a
matching.  Once one clique ``C`` of a node ``x`` is known, the other one is
forced to be ``{x} | (N(x) - C)``, so the whole structure follows by
propagation.  Only a bounded number of seed splits pass the matching test,
which keeps the search polynomial.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, _bits


class NotLineGraph(ValueError):
    def __init__(self, nodes):
        self.nodes = tuple(nodes)
        super().__init__(f"component on nodes {list(self.nodes)} is not a line graph")


class RootNotBipartite(ValueError):
    def __init__(self, cycle, root_edges):
        self.cycle = tuple(cycle)
        self.root_edges = frozenset(root_edges)
        super().__init__(f"root graph has odd cycle {list(self.cycle)}")


class NotBipartite(ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"odd cycle {list(self.cycle)}")


@dataclass(frozen=True)
class BipartiteRoot:
    """Root ``H`` with ``L(H)`` equal to the input graph.

    Root nodes are labelled ``1..k``.  ``phi[i]`` is the root edge ``(a, b)``
    (``a`` in ``class_a``) standing for node ``i`` of the input graph.
    """

    class_a: tuple[int, ...]
    class_b: tuple[int, ...]
    root_edges: frozenset[tuple[int, int]]
    phi: tuple[tuple[int, int], ...]

    @property
    def node_count(self) -> int:
        return len(self.class_a) + len(self.class_b)

    def graph(self) -> Graph:
        """The root as a :class:`Graph`; root label ``k`` becomes node ``k - 1``."""
        return Graph(self.node_count, [(a - 1, b - 1) for a, b in self.root_edges])


def line_graph(h: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``h``; node ``i`` of the result is the ``i``-th edge in sorted order."""
    edges = h.edge_list()
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    adjacent = set()
    for incident in at.values():
        for x in range(len(incident)):
            for y in range(x + 1, len(incident)):
                adjacent.add((incident[x], incident[y]))
    return Graph(len(edges), adjacent), edges


def bipartition(h: Graph) -> tuple[list[int], list[int]]:
    """Two-colour ``h``; per component, ``class_a`` holds the lowest node's colour.

    Raises :class:`NotBipartite` carrying an odd cycle.
    """
    colour = [-1] * h.n
    parent = [-1] * h.n
    for s in range(h.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in h.neighbours(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    parent[y] = x
                    queue.append(y)
                elif colour[y] == colour[x]:
                    raise NotBipartite(_odd_cycle(parent, x, y))
    a = [v for v in range(h.n) if colour[v] == 0]
    b = [v for v in range(h.n) if colour[v] == 1]
    return a, b


def _odd_cycle(parent, x, y):
    path_x = [x]
    while parent[path_x[-1]] >= 0:
        path_x.append(parent[path_x[-1]])
    path_y = [y]
    while parent[path_y[-1]] >= 0:
        path_y.append(parent[path_y[-1]])
    on_x = set(path_x)
    meet = next(v for v in path_y if v in on_x)
    up = path_x[: path_x.index(meet) + 1]
    down = path_y[: path_y.index(meet)]
    return up + down[::-1]


def _seed_splits(g: Graph, nbrs: list[int]) -> Iterator[tuple[int, int]]:
    """Splits of ``nbrs`` into two cliques (bitmasks) with matching cross edges.

    Two neighbours on the same side must be adjacent, so sides are the colour
    classes of the complement of ``g[nbrs]``; each complement component can be
    flipped independently.  The first component's orientation is fixed, as
    swapping sides gives the same cliques.
    """
    if not nbrs:
        yield 0, 0
        return
    s_mask = 0
    for x in nbrs:
        s_mask |= 1 << x
    colour: dict[int, int] = {}
    comps: list[tuple[int, int]] = []
    for s in nbrs:
        if s in colour:
            continue
        colour[s] = 0
        sides = [1 << s, 0]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in _bits(s_mask & ~g.adj[x] & ~(1 << x)):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    sides[colour[y]] |= 1 << y
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return
        comps.append((sides[0], sides[1]))
    # non-singleton complement components first: they constrain the most
    comps.sort(key=lambda c: (c[1] == 0, (c[0] | c[1]) & -(c[0] | c[1])))

    def matching_ok(a: int, b: int) -> bool:
        for x in _bits(a):
            if (g.adj[x] & b).bit_count() > 1:
                return False
        for x in _bits(b):
            if (g.adj[x] & a).bit_count() > 1:
                return False
        return True

    def assign(k: int, a: int, b: int):
        if k == len(comps):
            yield a, b
            return
        first, second = comps[k]
        options = [(first, second)] if k == 0 else [(first, second), (second, first)]
        for p, q in options:
            na, nb = a | p, b | q
            if matching_ok(na, nb):
                yield from assign(k + 1, na, nb)

    yield from assign(0, 0, 0)


def _propagate(g: Graph, comp: list[int], a_side: int, b_side: int):
    """Clique cover of ``comp`` forced by a seed split at its lowest node; ``None`` if inconsistent.

    Returns cliques (bitmasks) in discovery order and, per node, the indices
    of its two cliques.
    """
    v0 = comp[0]
    cliques: list[int] = []
    index: dict[int, int] = {}
    member: dict[int, list[int]] = {}
    pending = deque()

    def register(c: int) -> bool:
        if c in index:
            return True
        cid = len(cliques)
        index[c] = cid
        cliques.append(c)
        for y in _bits(c):
            m = member.setdefault(y, [])
            m.append(cid)
            if len(m) > 2:
                return False
            if len(m) == 1:
                pending.append(y)
        return True

    if not register(a_side | 1 << v0) or not register(b_side | 1 << v0):
        return None
    while pending:
        x = pending.popleft()
        if len(member[x]) != 1:
            continue
        known = cliques[member[x][0]]
        other = (g.adj[x] & ~known) | 1 << x
        for y in _bits(other):
            if other & ~(g.adj[y] | 1 << y):
                return None
        if not register(other):
            return None
    # a node can pick up its second clique from a neighbour's propagation,
    # so coverage of every component edge is checked explicitly
    for x in comp:
        if len(member.get(x, ())) != 2:
            return None
        for y in g.neighbours(x):
            if len(set(member[x]) & set(member.get(y, ()))) != 1:
                return None
    return cliques, member


def _component_roots(g: Graph, comp: list[int]):
    v0 = comp[0]
    for a_side, b_side in _seed_splits(g, g.neighbours(v0)):
        found = _propagate(g, comp, a_side, b_side)
        if found is not None:
            yield found


def recognize_root(g: Graph) -> BipartiteRoot:
    """Recover a bipartite root of ``g``.

    Components are rooted independently and their roots unioned.  Where a
    component has both a bipartite and a non-bipartite root (the triangle),
    the bipartite one is returned.  Raises :class:`NotLineGraph` or
    :class:`RootNotBipartite`.
    """
    class_a: list[int] = []
    class_b: list[int] = []
    root_edges: set[tuple[int, int]] = set()
    phi: list[tuple[int, int]] = [(0, 0)] * g.n
    next_label = 1
    for comp in g.components():
        if len(comp) == 1:
            a, b = next_label, next_label + 1
            next_label += 2
            class_a.append(a)
            class_b.append(b)
            root_edges.add((a, b))
            phi[comp[0]] = (a, b)
            continue
        odd = None
        chosen = None
        for cliques, member in _component_roots(g, comp):
            local = Graph(len(cliques), [tuple(member[x]) for x in comp])
            try:
                side_a, _ = bipartition(local)
            except NotBipartite as exc:
                if odd is None:
                    labelled = [(next_label + p, next_label + q) for p, q in local.edge_list()]
                    odd = RootNotBipartite([next_label + c for c in exc.cycle], labelled)
                continue
            chosen = cliques, member, set(side_a)
            break
        if chosen is None:
            if odd is not None:
                raise odd
            raise NotLineGraph(comp)
        cliques, member, side_a = chosen
        for cid in range(len(cliques)):
            (class_a if cid in side_a else class_b).append(next_label + cid)
        for x in comp:
            p, q = member[x]
            if q in side_a:
                p, q = q, p
            edge = (next_label + p, next_label + q)
            root_edges.add(edge)
            phi[x] = edge
        next_label += len(cliques)
    return BipartiteRoot(tuple(class_a), tuple(class_b), frozenset(root_edges), tuple(phi))
