"""Independent reference computations used to freeze expected values.

Nothing here imports the package under test except for plain data types, so
agreement with the library is a genuine cross-check.
"""

import functools
import itertools

import networkx as nx
import numpy as np


def _exchange_triples(subsets):
    index = {s: i for i, s in enumerate(subsets)}
    triples = []
    for ia, a in enumerate(subsets):
        for ib, b in enumerate(subsets):
            only_a, only_b = a - b, b - a
            if len(only_b) < 2:
                continue
            for x in only_a:
                options = [(index[a - {x} | {y}], index[b - {y} | {x}]) for y in only_b]
                triples.append((ia, ib, options))
    return triples


@functools.lru_cache(maxsize=None)
def basis_systems(n, r):
    """Every nonempty family of r-subsets of 1..n satisfying symmetric exchange.

    Vectorized over all 2^C(n,r) families: family f is bit i set when the
    i-th r-subset (lexicographic) is a basis.
    """
    subsets = [frozenset(c) for c in itertools.combinations(range(1, n + 1), r)]
    m = len(subsets)
    fam = np.arange(1, 2**m, dtype=np.uint32)
    has = [((fam >> i) & 1).astype(bool) for i in range(m)]
    ok = np.ones(len(fam), dtype=bool)
    for ia, ib, options in _exchange_triples(subsets):
        rescue = np.zeros(len(fam), dtype=bool)
        for ix, iy in options:
            rescue |= has[ix] & has[iy]
        ok &= ~(has[ia] & has[ib]) | rescue
    ordered = [tuple(sorted(s)) for s in subsets]
    result = []
    for f in fam[ok].tolist():
        result.append(tuple(ordered[i] for i in range(m) if f >> i & 1))
    return result


CORPUS_SHAPES = [(n, r) for n in range(1, 7) for r in range(0, min(n, 3) + 1)] + [(7, 1)]


def corpus():
    """(n, bases) for every oracle matroid with n <= 6, r <= 3, plus rank one on 7."""
    out = []
    for n, r in CORPUS_SHAPES:
        out += [(n, b) for b in basis_systems(n, r)]
    return out


def nx_beg(bases):
    sets = [frozenset(b) for b in bases]
    g = nx.Graph()
    g.add_nodes_from(range(len(sets)))
    for i, j in itertools.combinations(range(len(sets)), 2):
        if len(sets[i] ^ sets[j]) == 2:
            g.add_edge(i, j)
    return g


@functools.lru_cache(maxsize=None)
def beg_classes(max_nodes=7):
    """Basis exchange graphs up to isomorphism with at most ``max_nodes`` nodes."""
    reps = []
    for _, bases in corpus():
        if len(bases) > max_nodes:
            continue
        g = nx_beg(bases)
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def connected_atlas(max_nodes=7):
    """All connected graphs with 1..max_nodes nodes, one per isomorphism class."""
    return [g for g in nx.graph_atlas_g()[1:] if g.number_of_nodes() <= max_nodes and nx.is_connected(g)]


def is_beg(g):
    return any(nx.is_isomorphic(g, h) for h in beg_classes())


@functools.lru_cache(maxsize=None)
def _connected_roots(edge_count):
    """Connected graphs with exactly ``edge_count`` edges (at most edge_count + 1 nodes)."""
    return [h for h in nx.graph_atlas_g() if h.number_of_edges() == edge_count and h.number_of_nodes() > 0
            and nx.is_connected(h)]


def root_status(g):
    """'bipartite', 'odd' or 'none' for a networkx graph, by brute force over roots.

    Each component of a line graph has a connected root with as many edges as
    the component has nodes, hence at most one node more.  The atlas stops at
    seven nodes, so this is complete only for components of up to six nodes.
    """
    status = "bipartite"
    for comp in nx.connected_components(g):
        sub = g.subgraph(comp)
        roots = [h for h in _connected_roots(len(comp)) if nx.is_isomorphic(nx.line_graph(h), sub)]
        if not roots:
            return "none"
        if not any(nx.is_bipartite(h) for h in roots):
            status = "odd"
    return status


def hypersimplex_dual_graph(r, n):
    """Dual graph of the (r, n) hypersimplex for 2 <= r <= n - 2, from its known facets.

    Facet i is x_i >= 0 and facet n + i is x_i <= 1.  Two facets share a ridge
    when their common vertices span an affine space of dimension n - 3.
    """
    verts = [np.array([1 if i in s else 0 for i in range(n)]) for s in itertools.combinations(range(n), r)]
    on = [[v for v in verts if v[i] == 0] for i in range(n)] + [[v for v in verts if v[i] == 1] for i in range(n)]
    g = nx.Graph()
    g.add_nodes_from(range(2 * n))
    for f, h in itertools.combinations(range(2 * n), 2):
        common = [v for v in on[f] if any((v == w).all() for w in on[h])]
        if len(common) > 1 and np.linalg.matrix_rank(np.array(common[1:]) - common[0]) == n - 3:
            g.add_edge(f, h)
    return g
