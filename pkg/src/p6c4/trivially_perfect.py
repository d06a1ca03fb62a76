"""Clone classes, graded pairs, bamboo trees and C-pair decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field

from .blowup import BlowupMap, match_blowup
from .detect import find_induced_cycle, find_induced_path, find_special, is_chordal, universal_mask
from .graph import Graph, Violation, clone_partition, components_mask, induced_subgraph, iter_bits, to_mask


@dataclass(frozen=True)
class CloneClasses:
    classes: tuple[frozenset[int], ...]
    quotient: Graph

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)


def clone_quotient(g: Graph) -> CloneClasses:
    masks, quotient = clone_partition(g)
    classes = tuple(frozenset(iter_bits(m)) for m in masks)
    # cross edges between classes are all-or-nothing
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i < j:
                links = [bool(g.masks[u] & b) for u in iter_bits(a)]
                full = [g.masks[u] & b == b for u in iter_bits(a)]
                assert all(full) or not any(links), "clone classes are not homogeneous"
    return CloneClasses(classes, quotient)


@dataclass(frozen=True)
class GradedLabeling:
    order_a: tuple[int, ...]
    order_b: tuple[int, ...]
    crossing: tuple[int, int] | None


def graded_labeling(g: Graph, a: frozenset[int] | set[int], b: frozenset[int] | set[int]) -> GradedLabeling:
    """Order two disjoint cliques so cross-neighbourhoods are nested.

    Raises :class:`Violation` with a C4 witness when the nesting fails.
    """
    am, bm = to_mask(a), to_mask(b)
    if am & bm:
        raise Violation("graded.disjoint", iter_bits(am & bm))
    for name, m in (("A", am), ("B", bm)):
        if not g.is_clique(m):
            raise Violation("graded.clique", iter_bits(m), f"{name} is not a clique")
    order_a = sorted(a, key=lambda v: (-(g.masks[v] & bm).bit_count(), v))
    order_b = sorted(b, key=lambda v: (-(g.masks[v] & am).bit_count(), v))
    for x, y in zip(order_a, order_a[1:]):
        nx, ny = g.masks[x] & bm, g.masks[y] & bm
        if ny & ~nx:
            p = next(iter_bits(nx & ~ny))
            q = next(iter_bits(ny & ~nx))
            raise Violation("graded.nested", (x, p, q, y), "cross-neighbourhoods are not nested (C4)")
    crossing = None
    for ai in order_a:
        miss = [bj for bj in order_b if not g.has_edge(ai, bj)]
        if miss:
            j = order_b.index(miss[0])
            bj = order_b[j]
            i = next(k for k, x in enumerate(order_a) if not g.has_edge(x, bj))
            crossing = (order_a[i], bj)
            break
    return GradedLabeling(tuple(order_a), tuple(order_b), crossing)


def is_graded(g: Graph, a: int, b: int) -> tuple[int, int, int, int] | None:
    """None if the pair of vertex sets ``a``, ``b`` (masks) is graded, else a C4-shaped witness."""
    verts = list(iter_bits(a))
    nbrs = sorted(((g.masks[v] & b, v) for v in verts), key=lambda t: -t[0].bit_count())
    for (nx, x), (ny, y) in zip(nbrs, nbrs[1:]):
        if ny & ~nx:
            return x, next(iter_bits(nx & ~ny)), next(iter_bits(ny & ~nx)), y
    return None


@dataclass
class Bamboo:
    """Rooted tree of cliques for one component of a trivially perfect graph."""

    nodes: list[frozenset[int]]
    parent: list[int]
    spine: list[bool] = field(default_factory=list)

    def children(self, i: int) -> list[int]:
        return [j for j, p in enumerate(self.parent) if p == i]

    def ancestors(self, i: int) -> list[int]:
        out = []
        while self.parent[i] >= 0:
            i = self.parent[i]
            out.append(i)
        return out

    def descendants(self, i: int) -> list[int]:
        out = []
        stack = self.children(i)
        while stack:
            j = stack.pop()
            out.append(j)
            stack += self.children(j)
        return sorted(out)

    def leaves(self) -> list[int]:
        return [i for i in range(len(self.nodes)) if not self.children(i)]

    def is_bamboo(self) -> bool:
        """Internal nodes form one rooted path."""
        internal = [i for i in range(len(self.nodes)) if self.children(i)]
        for i in internal:
            if sum(1 for j in self.children(i) if self.children(j)) > 1:
                return False
        return True

    def to_json(self) -> dict:
        return {"nodes": [sorted(n) for n in self.nodes], "parent": list(self.parent), "spine": list(self.spine)}


def build_bamboo(g: Graph) -> list[Bamboo]:
    """The clique tree of every component; raises :class:`Violation` with a P4 or C4 witness."""
    out = []
    for comp in components_mask(g):
        nodes: list[frozenset[int]] = []
        parent: list[int] = []

        def grow(m: int, par: int) -> None:
            idx = len(nodes)
            if g.is_clique(m):
                nodes.append(frozenset(iter_bits(m)))
                parent.append(par)
                return
            u = universal_mask(g, m)
            if not u:
                sub, back = induced_subgraph(g, m)
                w = find_induced_cycle(sub, 4) or find_induced_path(sub, 4)
                assert w is not None, "connected graph without universal vertex must contain P4 or C4"
                raise Violation(f"trivially_perfect.{w.kind}", [back[v] for v in w.vertices],
                                "component without universal vertex")
            nodes.append(frozenset(iter_bits(u)))
            parent.append(par)
            for c in components_mask(g, m & ~u):
                grow(c, idx)

        grow(comp, -1)
        tree = Bamboo(nodes, parent)
        tree.spine = [bool(tree.children(i)) for i in range(len(nodes))]
        out.append(tree)
    return out


def expand_bamboos(n: int, trees: list[Bamboo]) -> Graph:
    """Rebuild the graph: same node, or ancestor/descendant nodes, means adjacent."""
    masks = [0] * n
    for t in trees:
        node_mask = [to_mask(x) for x in t.nodes]
        for i, m in enumerate(node_mask):
            related = m
            for j in t.ancestors(i) + t.descendants(i):
                related |= node_mask[j]
            for v in iter_bits(m):
                masks[v] |= related & ~(1 << v)
    return Graph(n, masks)


BLOWUP_P3 = "BLOWUP_P3"
BLOWUP_DART = "BLOWUP_DART"
OTHER = "OTHER"


def independent_simplicial_count(g: Graph) -> int:
    """Largest number of pairwise non-adjacent simplicial vertices."""
    from .detect import simplicial_mask

    return len(components_mask(g, simplicial_mask(g)))


def classify_bamboo_simplicial(g: Graph) -> tuple[str, BlowupMap | None]:
    """P3 blowup if fewer than three independent simplicials, dart blowup if fewer than four."""
    build_bamboo(g)  # precondition check
    count = independent_simplicial_count(g)
    if count < 3:
        bm = match_blowup(g, "P3")
        assert bm is not None, "fewer than three independent simplicials but no P3 blowup"
        return BLOWUP_P3, bm
    if count < 4:
        bm = match_blowup(g, "DART")
        assert bm is not None, "fewer than four independent simplicials but no dart blowup"
        return BLOWUP_DART, bm
    return OTHER, None


@dataclass
class CPairDecomposition:
    x: frozenset[int]
    a: frozenset[int]
    trees: list[Bamboo]
    nodes: list[frozenset[int]]          # X_1..X_k, flattened over all trees
    node_tree: list[tuple[int, int]]     # (tree index, node index in tree)
    below: list[frozenset[int]]          # U_i
    private: list[frozenset[int]]        # A_i
    slack: frozenset[int]                # A_0
    matching: list[int]                  # indices i of non-homogeneous nodes X_i

    def to_json(self) -> dict:
        return {
            "X": sorted(self.x),
            "A": sorted(self.a),
            "trees": [t.to_json() for t in self.trees],
            "nodes": [sorted(n) for n in self.nodes],
            "U": [sorted(u) for u in self.below],
            "A_i": [sorted(p) for p in self.private],
            "A_0": sorted(self.slack),
            "matching": list(self.matching),
        }


def check_cpair_axioms(g: Graph, x: int, a: int) -> None:
    """Raise :class:`Violation` naming the first failed C-pair axiom (masks ``x``, ``a``)."""
    if x & a:
        raise Violation("cpair.partition", iter_bits(x & a), "X and A overlap")
    if (x | a) != g.full:
        raise Violation("cpair.partition", iter_bits(g.full & ~(x | a)), "X and A do not cover V(G)")
    if not g.is_clique(a):
        raise Violation("cpair.A_clique", iter_bits(a))
    sub, back = induced_subgraph(g, x)
    for kind, finder in (("P4", lambda: find_induced_path(sub, 4)), ("C4", lambda: find_induced_cycle(sub, 4)),
                         ("2P3", lambda: find_special(sub, "2P3"))):
        w = finder()
        if w is not None:
            raise Violation(f"cpair.X_class.{kind}", [back[v] for v in w.vertices])
    for v in iter_bits(x):
        if not g.masks[v] & a:
            raise Violation("cpair.X_has_A_neighbor", (v,))
    for u in iter_bits(x):
        for v in iter_bits(x & ~g.masks[u] & ~((1 << (u + 1)) - 1)):
            common = g.masks[u] & g.masks[v] & a
            if common:
                raise Violation("cpair.no_common_A_neighbor", (u, v, next(iter_bits(common))))
    if not is_chordal(g):
        from .detect import find_hole

        raise Violation("cpair.chordal", find_hole(g).vertices)
    w = find_induced_path(g, 6)
    if w is not None:
        raise Violation("cpair.P6_free", w.vertices)


def decompose_cpair(g: Graph, x: frozenset[int] | set[int], a: frozenset[int] | set[int]) -> CPairDecomposition:
    """Split a C-pair into its basic skeleton and the acceptable matching."""
    xm, am = to_mask(x), to_mask(a)
    check_cpair_axioms(g, xm, am)
    sub, back = induced_subgraph(g, xm)
    local_trees = build_bamboo(sub)
    trees = []
    for t in local_trees:
        trees.append(Bamboo([frozenset(back[v] for v in n) for n in t.nodes], list(t.parent), list(t.spine)))
    for t in trees:
        if not t.is_bamboo():
            raise Violation("cpair.bamboo", sorted(set().union(*t.nodes)), "clique tree is not a bamboo")
    nodes, node_tree = [], []
    for ti, t in enumerate(trees):
        for ni, node in enumerate(t.nodes):
            nodes.append(node)
            node_tree.append((ti, ni))

    def nbr_a(node: frozenset[int]) -> int:
        m = 0
        for v in node:
            m |= g.masks[v] & am
        return m

    below, private, matching = [], [], []
    covered = 0
    for i, (ti, ni) in enumerate(node_tree):
        t = trees[ti]
        u = 0
        for d in t.descendants(ni):
            u |= nbr_a(t.nodes[d])
        own = nbr_a(nodes[i]) & ~u
        below.append(frozenset(iter_bits(u)))
        private.append(frozenset(iter_bits(own)))
        covered |= own
        # ancestors are complete to the A-neighbourhood of every descendant
        for d in t.descendants(ni):
            need = nbr_a(t.nodes[d])
            for v in nodes[i]:
                if need & ~g.masks[v]:
                    raise Violation("cpair.ancestor_complete", (v, next(iter_bits(need & ~g.masks[v]))))
        first = g.masks[next(iter(nodes[i]))] & am
        if any(g.masks[v] & am != first for v in nodes[i]):
            matching.append(i)
    slack = frozenset(iter_bits(am & ~covered))
    for p in matching:
        for q in matching:
            if p < q and not g.is_clique(to_mask(nodes[p]) | to_mask(nodes[q])):
                raise Violation("cpair.matching_clique", sorted(nodes[p] | nodes[q]))
    dec = CPairDecomposition(frozenset(iter_bits(xm)), frozenset(iter_bits(am)), trees, nodes, node_tree,
                             below, private, slack, matching)
    check_augmentation(g, dec)
    return dec


def check_augmentation(g: Graph, dec: CPairDecomposition) -> None:
    """The decomposition reproduces ``g``: complete, empty or graded between every X_i and A_j."""
    parts_a = [dec.slack] + dec.private
    for i, node in enumerate(dec.nodes):
        xi = to_mask(node)
        for j, part in enumerate(parts_a):
            aj = to_mask(part)
            if not aj:
                continue
            links = sum((g.masks[v] & aj).bit_count() for v in node)
            if links in (0, len(node) * len(part)):
                continue
            if j == i + 1 and i in dec.matching:
                w = is_graded(g, xi, aj)
                if w is not None:
                    raise Violation("cpair.matching_graded", w)
                continue
            raise Violation("cpair.augmentation", sorted(node | part),
                            f"node {i} and A-part {j} are neither complete nor anticomplete")


def basic_skeleton(g: Graph, dec: CPairDecomposition) -> Graph:
    """One vertex x_i per node and a_0..a_k; x_i ~ a_j iff some edge joins X_i and A_j."""
    k = len(dec.nodes)
    masks = [0] * (2 * k + 1)
    labels = [f"x{i + 1}" for i in range(k)] + [f"a{j}" for j in range(k + 1)]
    for i, (ti, ni) in enumerate(dec.node_tree):
        t = dec.trees[ti]
        for d in t.ancestors(ni) + t.descendants(ni):
            masks[i] |= 1 << dec.node_tree.index((ti, d))
    for p in range(k + 1):
        for q in range(k + 1):
            if p != q:
                masks[k + p] |= 1 << (k + q)
    parts_a = [dec.slack] + dec.private
    for i, node in enumerate(dec.nodes):
        for j, part in enumerate(parts_a):
            if any(g.masks[v] & to_mask(part) for v in node):
                masks[i] |= 1 << (k + j)
                masks[k + j] |= 1 << i
    return Graph(2 * k + 1, masks, labels)


__all__ = [
    "CloneClasses", "clone_quotient", "GradedLabeling", "graded_labeling", "Bamboo", "build_bamboo",
    "expand_bamboos", "classify_bamboo_simplicial", "CPairDecomposition", "decompose_cpair",
    "BLOWUP_P3", "BLOWUP_DART", "OTHER", "basic_skeleton",
]
