"""Blowups: construction, validation and recognition against a base graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .detect import iter_induced
from .graph import Graph, GraphError, Violation, build_graph, clone_partition, iter_bits, to_mask
from . import named


@dataclass(frozen=True)
class BlowupMap:
    """Bags indexed by base vertex; ``bags[i]`` is the clique replacing base vertex ``i``."""

    base_name: str
    base: Graph
    bags: tuple[frozenset[int], ...]

    def bag(self, label: str) -> frozenset[int]:
        return self.bags[self.base.index(label)]

    def sizes(self) -> list[int]:
        return [len(b) for b in self.bags]

    def to_json(self, g: Graph | None = None) -> dict:
        out = {}
        for i, bag in enumerate(self.bags):
            members = sorted(bag)
            entry: dict = {"vertices": members}
            if g is not None and g.labels is not None:
                entry["labels"] = [g.label(v) for v in members]
            out[self.base.label(i)] = entry
        return {"base": self.base_name, "bags": out}


def blowup_graph(base: Graph, sizes: Sequence[int], base_name: str = "custom") -> tuple[Graph, BlowupMap]:
    """Replace base vertex ``i`` by a clique of ``sizes[i]`` vertices, numbered consecutively."""
    if len(sizes) != base.n:
        raise GraphError(f"expected {base.n} bag sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise GraphError("bag sizes must be non-negative")
    bags = []
    labels = []
    n = 0
    for i, s in enumerate(sizes):
        bags.append(list(range(n, n + s)))
        name = base.label(i)
        labels += [name] if s == 1 else [f"{name}.{j}" for j in range(s)]
        n += s
    edges = []
    for i, bag in enumerate(bags):
        edges += [(bag[p], bag[q]) for p in range(len(bag)) for q in range(p + 1, len(bag))]
        for j in base.adj[i]:
            if j > i:
                edges += [(u, v) for u in bag for v in bags[j]]
    g = build_graph(n, edges, labels)
    return g, BlowupMap(base_name, base, tuple(frozenset(b) for b in bags))


def validate_blowup(g: Graph, bm: BlowupMap) -> None:
    """Raise :class:`Violation` naming the first failed blowup clause."""
    if len(bm.bags) != bm.base.n:
        raise Violation("blowup.bag_count", (), f"{len(bm.bags)} bags for {bm.base.n} base vertices")
    seen = 0
    masks = []
    for bag in bm.bags:
        m = to_mask(bag)
        if m & seen:
            raise Violation("blowup.partition", iter_bits(m & seen), "bags overlap")
        if m >> g.n:
            raise Violation("blowup.partition", [v for v in bag if v >= g.n], "vertex out of range")
        seen |= m
        masks.append(m)
    if seen != g.full:
        raise Violation("blowup.partition", iter_bits(g.full & ~seen), "bags do not cover V(G)")
    for i, m in enumerate(masks):
        if not g.is_clique(m):
            u, v = _non_edge(g, m, m)
            raise Violation("blowup.bag_clique", (u, v), f"bag {bm.base.label(i)} is not a clique")
    for i in range(bm.base.n):
        for j in range(i + 1, bm.base.n):
            if not masks[i] or not masks[j]:
                continue
            if bm.base.has_edge(i, j):
                for u in iter_bits(masks[i]):
                    if masks[j] & ~g.masks[u]:
                        v = next(iter_bits(masks[j] & ~g.masks[u]))
                        raise Violation("blowup.complete_on_edge", (u, v),
                                        f"{bm.base.label(i)}{bm.base.label(j)} is a base edge")
            else:
                for u in iter_bits(masks[i]):
                    if masks[j] & g.masks[u]:
                        v = next(iter_bits(masks[j] & g.masks[u]))
                        raise Violation("blowup.empty_on_non_edge", (u, v),
                                        f"{bm.base.label(i)}{bm.base.label(j)} is not a base edge")


def _non_edge(g: Graph, a: int, b: int) -> tuple[int, int]:
    for u in iter_bits(a):
        miss = b & ~g.masks[u] & ~(1 << u)
        if miss:
            return u, next(iter_bits(miss))
    raise AssertionError("no non-edge")


def _bfs_order(q: Graph) -> list[int]:
    order: list[int] = []
    seen = 0
    for s in range(q.n):
        if seen >> s & 1:
            continue
        frontier = [s]
        seen |= 1 << s
        while frontier:
            nxt = []
            for v in frontier:
                order.append(v)
                for u in iter_bits(q.masks[v] & ~seen):
                    seen |= 1 << u
                    nxt.append(u)
            frontier = nxt
    return order


def match_blowup(g: Graph, base: Graph | str, base_name: str | None = None) -> BlowupMap | None:
    """Find bags exhibiting ``g`` as a blowup of ``base``, or None.

    ``g`` is a blowup of ``base`` exactly when its clone quotient is an
    induced subgraph of ``base``. Classes are then spread over unused base
    vertices that are clones of the target inside the occupied part, which
    keeps the map valid while reducing the number of empty bags.
    """
    if isinstance(base, str):
        base_name = base_name or base
        base = named.base_graph(base)
    base_name = base_name or "custom"
    classes, quotient = clone_partition(g)
    if quotient.n > base.n:
        return None
    order = _bfs_order(quotient)
    pos = {v: i for i, v in enumerate(order)}
    permuted = Graph(quotient.n, [sum(1 << pos[u] for u in iter_bits(quotient.masks[v])) for v in order])
    hit = next(iter_induced(base, permuted), None)
    if hit is None:
        return None
    owner = [-1] * base.n  # class index held by each base vertex
    bag_of = [0] * base.n
    for i, v in enumerate(order):
        owner[hit[i]] = v
        bag_of[hit[i]] = classes[v]
    # spread classes with more vertices than base slots onto compatible empty slots
    changed = True
    while changed:
        changed = False
        used = sum(1 << b for b in range(base.n) if bag_of[b])
        for w in range(base.n):
            if bag_of[w]:
                continue
            for b in iter_bits(used):
                if bag_of[b].bit_count() < 2:
                    continue
                same = sum(1 << c for c in iter_bits(used) if owner[c] == owner[b])
                others = used & ~same
                if (base.masks[w] & same) != same:
                    continue
                if (base.masks[w] & others) != (base.masks[b] & others):
                    continue
                top = bag_of[b].bit_length() - 1
                bag_of[b] &= ~(1 << top)
                bag_of[w] = 1 << top
                owner[w] = owner[b]
                changed = True
                break
            if changed:
                break
    bm = BlowupMap(base_name, base, tuple(frozenset(iter_bits(m)) for m in bag_of))
    validate_blowup(g, bm)
    return bm
