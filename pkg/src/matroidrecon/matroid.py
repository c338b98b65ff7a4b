"""Matroids given by an explicit list of bases on the ground set ``1..n``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, _bits


class MatroidError(ValueError):
    pass


class ExchangeViolation(MatroidError):
    """No ``b`` in ``B`` makes both ``A - a + b`` and ``B + a - b`` bases."""

    def __init__(self, a_basis, b_basis, element):
        self.a_basis = tuple(a_basis)
        self.b_basis = tuple(b_basis)
        self.element = element
        super().__init__(
            f"exchange fails for A={_fmt(self.a_basis)}, B={_fmt(self.b_basis)}, a={element}"
        )


def _fmt(basis) -> str:
    return "{" + ",".join(map(str, basis)) + "}"


def _mask(basis) -> int:
    m = 0
    for e in basis:
        m |= 1 << e
    return m


def _unmask(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class Matroid:
    """Basis system on ``1..ground_size``.

    ``bases`` is normalized to sorted tuples in lexicographic order, so equal
    basis families compare equal.  Construction does not check the exchange
    axiom; use :func:`validate_matroid` for untrusted input.
    """

    ground_size: int
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(sorted({tuple(sorted(b)) for b in self.bases}))
        object.__setattr__(self, "bases", normalized)

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def corank(self) -> int:
        return self.ground_size - self.rank

    @property
    def masks(self) -> list[int]:
        return [_mask(b) for b in self.bases]

    def __str__(self):
        return f"Matroid(n={self.ground_size}, bases=[{' '.join(''.join(map(str, b)) or '{}' for b in self.bases)}])"


def validate_matroid(ground_size: int, bases) -> Matroid:
    """Check the basis axioms by brute force and return the matroid.

    Raises :class:`ExchangeViolation` with a concrete ``(A, B, a)`` when the
    symmetric exchange property fails.
    """
    bases = [tuple(sorted(b)) for b in bases]
    if not bases:
        raise MatroidError("a matroid needs at least one basis")
    sizes = {len(b) for b in bases}
    if len(sizes) != 1:
        raise MatroidError(f"bases have different sizes {sorted(sizes)}")
    for b in bases:
        if len(set(b)) != len(b):
            raise MatroidError(f"basis {_fmt(b)} repeats an element")
        if any(not 1 <= e <= ground_size for e in b):
            raise MatroidError(f"basis {_fmt(b)} has an element outside 1..{ground_size}")
    m = Matroid(ground_size, bases)
    masks = m.masks
    family = set(masks)
    for a_mask in masks:
        for b_mask in masks:
            only_b = b_mask & ~a_mask
            if only_b.bit_count() < 2:
                continue
            for a in _bits(a_mask & ~b_mask):
                abit = 1 << a
                if not any(
                    (a_mask ^ abit | 1 << b) in family and (b_mask | abit) ^ (1 << b) in family
                    for b in _bits(only_b)
                ):
                    raise ExchangeViolation(_unmask(a_mask), _unmask(b_mask), a)
    return m


def dual(m: Matroid) -> Matroid:
    full = ((1 << m.ground_size) - 1) << 1
    return Matroid(m.ground_size, [_unmask(full & ~x) for x in m.masks])


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum; elements of ``m2`` are shifted by ``m1.ground_size``."""
    shift = m1.ground_size
    bases = [b1 + tuple(e + shift for e in b2) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(m1.ground_size + m2.ground_size, bases)


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidError(f"rank {r} out of range for {n} elements")
    return Matroid(n, list(itertools.combinations(range(1, n + 1), r)))


def beg(m: Matroid) -> tuple[Graph, list[tuple[int, ...]]]:
    """Basis exchange graph; node ``i`` is ``m.bases[i]``."""
    masks = m.masks
    edges = []
    for i, x in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if (x ^ masks[j]).bit_count() == 2:
                edges.append((i, j))
    return Graph(len(masks), edges), list(m.bases)


def exchange_bipartite(m: Matroid, basis) -> frozenset[tuple[int, int]]:
    """Pairs ``(x, e)``, ``x`` in the basis and ``e`` outside, with ``B - x + e`` a basis."""
    b_mask = _mask(basis)
    family = set(m.masks)
    if b_mask not in family:
        raise MatroidError(f"{_fmt(sorted(basis))} is not a basis")
    outside = (((1 << m.ground_size) - 1) << 1) & ~b_mask
    return frozenset(
        (x, e)
        for x in _bits(b_mask)
        for e in _bits(outside)
        if (b_mask ^ (1 << x) | 1 << e) in family
    )


@dataclass(frozen=True)
class Component:
    elements: tuple[int, ...]
    rank: int
    corank: int


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Component, ...]
    loops: tuple[int, ...]
    coloops: tuple[int, ...]


def components(m: Matroid, basis=None) -> ComponentDecomposition:
    """Connected components read off the exchange bipartite graph at ``basis``.

    Isolated elements of that graph are loops (outside the basis) or coloops
    (inside it).  Components are ordered by smallest element.
    """
    if basis is None:
        basis = m.bases[0]
    b_set = set(basis)
    pairs = exchange_bipartite(m, basis)
    adj: dict[int, set[int]] = {e: set() for e in range(1, m.ground_size + 1)}
    for x, e in pairs:
        adj[x].add(e)
        adj[e].add(x)
    loops, coloops, comps = [], [], []
    seen: set[int] = set()
    for e in range(1, m.ground_size + 1):
        if e in seen:
            continue
        if not adj[e]:
            seen.add(e)
            (coloops if e in b_set else loops).append(e)
            continue
        comp = {e}
        stack = [e]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        r = len(comp & b_set)
        comps.append(Component(tuple(sorted(comp)), r, len(comp) - r))
    return ComponentDecomposition(tuple(comps), tuple(loops), tuple(coloops))


def restrict(m: Matroid, elements) -> Matroid:
    """Restriction to a separator, relabelled ``1..len(elements)`` in sorted order."""
    relabel = {e: i + 1 for i, e in enumerate(sorted(elements))}
    return Matroid(len(relabel), {tuple(relabel[e] for e in b if e in relabel) for b in m.bases})


def _refined_colours(m: Matroid) -> list[int]:
    """Isomorphism-invariant element colours (index ``e - 1``) by iterated refinement."""
    n = m.ground_size
    colour = [sum(1 for b in m.bases if e in b) for e in range(1, n + 1)]
    count = len(set(colour))
    while True:
        sig = []
        for e in range(1, n + 1):
            profile = sorted(tuple(sorted(colour[x - 1] for x in b)) for b in m.bases if e in b)
            sig.append((colour[e - 1], tuple(profile)))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [ranking[s] for s in sig]
        if len(ranking) == count:
            return colour
        count = len(ranking)


def _canonical_relabel(m: Matroid) -> Matroid:
    """Lexicographically least basis list among colour-respecting relabellings.

    Elements are relabelled cell by cell in increasing colour order; within a
    cell every ordering is tried.
    """
    colour = _refined_colours(m)
    cells: dict[int, list[int]] = {}
    for e in range(1, m.ground_size + 1):
        cells.setdefault(colour[e - 1], []).append(e)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    for arrangement in itertools.product(*(itertools.permutations(c) for c in ordered)):
        relabel = {}
        for e in itertools.chain.from_iterable(arrangement):
            relabel[e] = len(relabel) + 1
        candidate = tuple(sorted(tuple(sorted(relabel[e] for e in b)) for b in m.bases))
        if best is None or candidate < best:
            best = candidate
    return Matroid(m.ground_size, best)


def class_canonical(m: Matroid) -> Matroid:
    """Representative of ``m`` up to isomorphism, duality of components, loops and coloops.

    Each connected component is oriented so that rank <= corank (both
    orientations are compared on ties), relabelled canonically, and the
    components are reassembled in sorted order.
    """
    parts = []
    for comp in components(m).components:
        sub = restrict(m, comp.elements)
        options = [sub] if comp.rank < comp.corank else [dual(sub)] if comp.rank > comp.corank else [sub, dual(sub)]
        parts.append(min((_canonical_relabel(x) for x in options), key=lambda x: x.bases))
    parts.sort(key=lambda x: (x.ground_size, x.rank, x.bases))
    result = Matroid(0, [()])
    for part in parts:
        result = direct_sum(result, part)
    return result


def matroid_iso(m1: Matroid, m2: Matroid) -> dict[int, int] | None:
    """Ground-set bijection mapping bases of ``m1`` onto bases of ``m2``, or ``None``."""
    n = m1.ground_size
    if n != m2.ground_size or len(m1.bases) != len(m2.bases) or m1.rank != m2.rank:
        return None

    def pair_counts(m):
        counts = [[0] * (n + 1) for _ in range(n + 1)]
        for b in m.bases:
            for x in b:
                for y in b:
                    counts[x][y] += 1
        return counts

    c1, c2 = pair_counts(m1), pair_counts(m2)
    target = set(m2.masks)
    source = m1.masks
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(e: int) -> bool:
        if e > n:
            return all(sum(1 << image[x] for x in _bits(b)) in target for b in source)
        for f in range(1, n + 1):
            if used[f] or c1[e][e] != c2[f][f]:
                continue
            if any(c1[e][x] != c2[f][image[x]] for x in range(1, e)):
                continue
            image[e] = f
            used[f] = True
            if extend(e + 1):
                return True
            used[f] = False
        return False

    if not extend(1):
        return None
    return {e: image[e] for e in range(1, n + 1)}


def polytope_vertices(m: Matroid) -> list[tuple[Fraction, ...]]:
    """Indicator vectors of the bases, one per basis, in basis order."""
    one, zero = Fraction(1), Fraction(0)
    return [tuple(one if e in b else zero for e in range(1, m.ground_size + 1)) for b in m.bases]
