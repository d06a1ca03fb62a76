"""Immutable simple graphs on dense integer vertex ids.

Adjacency is stored twice: as sorted tuples (for deterministic iteration)
and as Python-int bitmasks (for fast set algebra in the search kernels).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Violation(Exception):
    """A named axiom or precondition failed; ``vertices`` witness the failure."""

    def __init__(self, axiom: str, vertices: Iterable[int] = (), detail: str = ""):
        self.axiom = axiom
        self.vertices = tuple(vertices)
        self.detail = detail
        msg = axiom if not detail else f"{axiom}: {detail}"
        if self.vertices:
            msg += f" (witness {list(self.vertices)})"
        super().__init__(msg)

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "vertices": list(self.vertices), "detail": self.detail}


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Instances are treated as immutable; all derived graphs are built with
    :func:`induced_subgraph` or :func:`build_graph`.
    """

    __slots__ = ("n", "adj", "masks", "labels", "_m")

    def __init__(self, n: int, masks: Sequence[int], labels: Sequence[str] | None = None):
        self.n = n
        self.masks: tuple[int, ...] = tuple(masks)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(iter_bits(m)) for m in self.masks)
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None
        self._m = sum(len(a) for a in self.adj) // 2
        for v, m in enumerate(self.masks):
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if m >> n:
                raise GraphError(f"neighbor of {v} out of range")
            for u in iter_bits(m):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self) -> int:
        return self._m

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def closed(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.masks[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if mask & self.masks[v]:
                return False
        return True

    def neighbors_in(self, v: int, mask: int) -> int:
        return self.masks[v] & mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if n < 0:
        raise GraphError("negative vertex count")
    masks = [0] * n
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge #{i} ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge #{i} ({u}, {v}) is a self-loop")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks, labels)


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Return ``(g[s], mapping)`` where ``mapping[i]`` is the host id of vertex ``i``."""
    if isinstance(s, int):
        verts = list(iter_bits(s))
        if verts and verts[-1] >= g.n:
            raise GraphError(f"vertex {verts[-1]} out of range")
    else:
        verts = sorted(set(s))
        for v in verts:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(verts)}
    masks = []
    for v in verts:
        m = 0
        for u in iter_bits(g.masks[v]):
            j = pos.get(u)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    labels = [g.labels[v] for v in verts] if g.labels is not None else None
    return Graph(len(verts), masks, labels), verts


def components_mask(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by smallest member."""
    rest = g.full if within is None else within
    out = []
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    return [frozenset(iter_bits(c)) for c in components_mask(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components_mask(g)) == 1


def degree_stats(g: Graph) -> tuple[int, list[int]]:
    """Return ``(max degree, degree list)``; the empty graph is rejected."""
    if g.n == 0:
        raise GraphError("degree statistics are undefined for the empty graph")
    degs = [len(a) for a in g.adj]
    return max(degs), degs


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)], g.labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    masks = list(g.masks) + [m << g.n for m in h.masks]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [g.label(v) for v in g.vertices()] + [h.label(v) for v in h.vertices()]
    return Graph(g.n + h.n, masks, labels)


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color index with the number of distinct colors."""

    assignment: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.assignment))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "Coloring":
        assignment = [-1] * n
        for c, cls_ in enumerate(classes):
            for v in cls_:
                assignment[v] = c
        if -1 in assignment:
            raise GraphError(f"vertex {assignment.index(-1)} left uncolored")
        return cls(tuple(assignment))

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def normalized(self) -> "Coloring":
        """Relabel colors 0..k-1 by first appearance."""
        seen: dict[int, int] = {}
        return Coloring(tuple(seen.setdefault(c, len(seen)) for c in self.assignment))


def clone_partition(g: Graph) -> tuple[list[int], Graph]:
    """Closed-twin classes as bitmasks ordered by smallest member, and the quotient.

    Quotient vertex ``i`` stands for class ``i``; its label is the label of the
    class minimum.
    """
    index: dict[int, int] = {}
    classes: list[int] = []
    cls_of = [0] * g.n
    for v in range(g.n):
        key = g.masks[v] | (1 << v)
        i = index.get(key)
        if i is None:
            i = index[key] = len(classes)
            classes.append(0)
        classes[i] |= 1 << v
        cls_of[v] = i
    masks = []
    for c in classes:
        rep = (c & -c).bit_length() - 1
        m = 0
        for u in iter_bits(g.masks[rep] & ~c):
            m |= 1 << cls_of[u]
        masks.append(m)
    labels = None
    if g.labels is not None:
        labels = [g.labels[(c & -c).bit_length() - 1] for c in classes]
    return classes, Graph(len(classes), masks, labels)
