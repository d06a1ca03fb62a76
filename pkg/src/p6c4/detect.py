"""Forbidden induced subgraphs, chordality, simplicial vertices, clique cutsets.

Pattern search is a backtracking embedding of the pattern's vertices in their
listed order, trying host vertices in increasing id. The first embedding found
is therefore the lexicographically smallest one. Every pattern used here has
no closed twins, so the search runs on the clone quotient of the host and
maps back through class minima, which keeps the lexicographic guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import named
from .graph import Graph, GraphError, clone_partition, components_mask, iter_bits, popcount

KINDS = ("P4", "P6", "C4", "C5", "C6", "F1", "F2", "F3", "HOLE", "2P3", "DART")


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]


def _has_twins(p: Graph) -> bool:
    seen = set()
    for v in range(p.n):
        key = p.masks[v] | (1 << v)
        if key in seen:
            return True
        seen.add(key)
    return False


def iter_induced(g: Graph, pattern: Graph, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every induced embedding of ``pattern`` in ``g`` in lexicographic order."""
    k = pattern.n
    pool = g.full if within is None else within
    chosen: list[int] = []
    # constraints[i] = (earlier neighbours, earlier non-neighbours) of pattern vertex i
    constraints = []
    for i in range(k):
        nb = [j for j in range(i) if pattern.has_edge(i, j)]
        non = [j for j in range(i) if not pattern.has_edge(i, j)]
        constraints.append((nb, non))

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(chosen)
            return
        nb, non = constraints[i]
        cand = pool & ~used
        for j in nb:
            cand &= g.masks[chosen[j]]
        for j in non:
            cand &= ~g.masks[chosen[j]]
        for v in iter_bits(cand):
            chosen.append(v)
            yield from rec(i + 1, used | (1 << v))
            chosen.pop()

    if k == 0:
        yield ()
        return
    yield from rec(0, 0)


def find_induced(g: Graph, pattern: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically smallest induced embedding of ``pattern``, or None."""
    if pattern.n > g.n:
        return None
    if within is None and not _has_twins(pattern) and g.n > 8:
        classes, quotient = clone_partition(g)
        if quotient.n < g.n:
            hit = next(iter_induced(quotient, pattern), None)
            if hit is None:
                return None
            return tuple((classes[i] & -classes[i]).bit_length() - 1 for i in hit)
    return next(iter_induced(g, pattern, within), None)


def find_induced_path(g: Graph, k: int) -> Witness | None:
    if k < 1:
        raise GraphError("path length must be at least 1")
    hit = find_induced(g, named.path(k))
    return Witness(f"P{k}", hit) if hit is not None else None


def find_induced_cycle(g: Graph, k: int) -> Witness | None:
    if k < 3:
        raise GraphError("cycle length must be at least 3")
    hit = find_induced(g, named.cycle(k))
    return Witness(f"C{k}", hit) if hit is not None else None


SPECIAL = {
    "F1": named.f1,
    "F2": named.f2,
    "F3": named.f3,
    "2P3": named.two_p3,
    "DART": named.dart,
}


def find_special(g: Graph, which: str) -> Witness | None:
    key = which.upper()
    if key not in SPECIAL:
        raise GraphError(f"unknown special pattern {which!r}")
    hit = find_induced(g, SPECIAL[key]())
    return Witness(key, hit) if hit is not None else None


def find_c4(g: Graph) -> Witness | None:
    return find_induced_cycle(g, 4)


def is_p6c4_free(g: Graph) -> tuple[bool, Witness | None]:
    """(P6, C4)-freeness; a C4 witness is preferred when both occur."""
    w = find_c4(g)
    if w is None:
        w = find_induced_path(g, 6)
    return w is None, w


def is_free_of(g: Graph, kinds: tuple[str, ...]) -> tuple[bool, Witness | None]:
    for kind in kinds:
        if kind[0] == "P" and kind[1:].isdigit():
            w = find_induced_path(g, int(kind[1:]))
        elif kind[0] == "C" and kind[1:].isdigit():
            w = find_induced_cycle(g, int(kind[1:]))
        else:
            w = find_special(g, kind)
        if w is not None:
            return False, w
    return True, None


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.is_clique(g.masks[v]))


def simplicial_mask(g: Graph, within: int | None = None) -> int:
    pool = g.full if within is None else within
    out = 0
    for v in iter_bits(pool):
        if g.is_clique(g.masks[v] & pool):
            out |= 1 << v
    return out


def universal_mask(g: Graph, within: int | None = None) -> int:
    pool = g.full if within is None else within
    out = 0
    for v in iter_bits(pool):
        if (pool & ~(1 << v)) & ~g.masks[v] == 0:
            out |= 1 << v
    return out


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(iter_bits(universal_mask(g)))


def mcs_order(g: Graph, within: int | None = None) -> list[int]:
    """Maximum cardinality search; the reverse is a PEO iff the graph is chordal."""
    pool = g.full if within is None else within
    weight = {v: 0 for v in iter_bits(pool)}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for u in iter_bits(g.masks[v] & pool):
            if u in weight:
                weight[u] += 1
    order.reverse()
    return order


def is_peo(g: Graph, order: list[int]) -> tuple[bool, int | None]:
    """Check each vertex's later neighbours form a clique; return first failure."""
    later = 0
    for v in reversed(order):
        if not g.is_clique(g.masks[v] & later):
            return False, v
        later |= 1 << v
    return True, None


def _shortest_path(g: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    prev = {s: -1}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(g.masks[v] & allowed):
                if u not in prev:
                    prev[u] = v
                    if u == t:
                        out = [t]
                        while prev[out[-1]] != -1:
                            out.append(prev[out[-1]])
                        return out[::-1]
                    nxt.append(u)
        frontier = nxt
    return None


def find_hole(g: Graph, within: int | None = None) -> Witness | None:
    """An induced cycle of length at least 4, or None if chordal."""
    pool = g.full if within is None else within
    for v in iter_bits(pool):
        nb = g.masks[v] & pool
        for u in iter_bits(nb):
            for w in iter_bits(nb & ~g.masks[u]):
                if w <= u:
                    continue
                allowed = pool & ~(nb | (1 << v)) | (1 << u) | (1 << w)
                p = _shortest_path(g, u, w, allowed)
                if p is not None:
                    return Witness("HOLE", tuple([v] + p))
    return None


def chordality(g: Graph, within: int | None = None) -> EliminationOrder | Witness:
    order = mcs_order(g, within)
    ok, _ = is_peo(g, order)
    if ok:
        return EliminationOrder(tuple(order))
    hole = find_hole(g, within)
    if hole is None:
        raise AssertionError("elimination order failed but no hole was found")
    return hole


def is_chordal(g: Graph, within: int | None = None) -> bool:
    return is_peo(g, mcs_order(g, within))[0]


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """All maximal cliques of ``g[within]`` as bitmasks (Bron-Kerbosch with pivoting), sorted."""
    pool = g.full if within is None else within
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: popcount(p & g.masks[u]))
        for v in iter_bits(p & ~g.masks[pivot]):
            bit = 1 << v
            bk(r | bit, p & g.masks[v], x & g.masks[v])
            p &= ~bit
            x |= bit

    if pool:
        bk(0, pool, 0)
    out.sort(key=lambda m: tuple(iter_bits(m)))
    return out


@dataclass(frozen=True)
class CliqueCutset:
    clique: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


def find_clique_cutset_mask(g: Graph, within: int | None = None) -> tuple[int, int, int] | None:
    """Return ``(K, A, B)`` bitmasks with K a clique separating A from B.

    Every clique cutset lies in a maximal clique M, and some component C of
    the graph minus M then has N(C) as a clique cutset; so scanning all maximal
    cliques and their complementary components is complete.
    """
    pool = g.full if within is None else within
    for m in maximal_cliques(g, pool):
        for comp in components_mask(g, pool & ~m):
            nb = 0
            for v in iter_bits(comp):
                nb |= g.masks[v]
            nb &= m
            rest = pool & ~comp & ~nb
            if rest:
                return nb, comp, rest
    return None


def find_clique_cutset(g: Graph) -> CliqueCutset | None:
    if g.n and len(components_mask(g)) != 1:
        raise GraphError("clique cutset search requires a connected graph")
    hit = find_clique_cutset_mask(g)
    if hit is None:
        return None
    k, a, b = hit
    return CliqueCutset(frozenset(iter_bits(k)), frozenset(iter_bits(a)), frozenset(iter_bits(b)))


def verify_witness(g: Graph, w: Witness) -> bool:
    """Re-check a witness against its pattern in the stated order."""
    if w.kind == "HOLE":
        k = len(w.vertices)
        if k < 4:
            return False
        pattern = named.cycle(k)
    elif w.kind in SPECIAL:
        pattern = SPECIAL[w.kind]()
    elif w.kind[0] == "P":
        pattern = named.path(int(w.kind[1:]))
    elif w.kind[0] == "C":
        pattern = named.cycle(int(w.kind[1:]))
    else:
        return False
    vs = w.vertices
    if len(vs) != pattern.n or len(set(vs)) != len(vs):
        return False
    return all(g.has_edge(vs[i], vs[j]) == pattern.has_edge(i, j)
               for i in range(len(vs)) for j in range(i + 1, len(vs)))
