"""Hole-neighbourhood partitions, structure certificates and the classifier.

Every certificate produced by :func:`classify` is re-checked by
:func:`validate_certificate` before it is returned, so a wrong construction
surfaces as :class:`StructureFailure` instead of a silently bad answer.

Index convention: ``hole[i]`` is ``v_{i+1}``. For a C5 partition ``T[i]``
is the set whose hole trace is ``{v_i, v_{i+1}, v_{i+2}}`` in this shifted
numbering (so ``T[0]`` is ``T_1``), ``W[i]`` sees only ``v_{i+1}``, and
``X[i]`` sees ``v_{i+1}`` and ``v_{i+2}`` (``X[0]`` is ``X_12``, ``X[4]``
is ``X_51``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import named
from .blowup import BlowupMap, match_blowup, validate_blowup
from .detect import (
    EliminationOrder,
    Witness,
    chordality,
    find_clique_cutset_mask,
    find_induced_cycle,
    find_special,
    is_free_of,
    is_p6c4_free,
    is_peo,
    iter_induced,
    universal_mask,
)
from .graph import (
    Graph,
    GraphError,
    Violation,
    build_graph,
    clone_partition,
    components_mask,
    induced_subgraph,
    iter_bits,
    popcount,
    to_mask,
)
from .trivially_perfect import is_graded

SCHEMA_VERSION = 1


class NotInClass(GraphError):
    """The input is not (P6, C4)-free; ``witness`` is an induced P6 or C4."""

    def __init__(self, witness: Witness):
        self.witness = witness
        super().__init__(f"graph contains an induced {witness.kind} on {list(witness.vertices)}")


class StructureFailure(RuntimeError):
    """No branch produced a valid certificate; this signals a bug, not bad input."""

    def __init__(self, message: str, analysis: dict | None = None):
        self.analysis = analysis or {}
        super().__init__(message)


# ---------------------------------------------------------------- helpers

def _nbrs(g: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= g.masks[v]
    return out


def _first_non_edge(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    for u in iter_bits(a):
        miss = b & ~g.masks[u] & ~(1 << u)
        if miss:
            return u, next(iter_bits(miss))
    return None


def _first_edge(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    for u in iter_bits(a):
        hit = b & g.masks[u]
        if hit:
            return u, next(iter_bits(hit))
    return None


def _require_complete(g: Graph, a: int, b: int, clause: str, what: str) -> None:
    pair = _first_non_edge(g, a, b)
    if pair is not None:
        raise Violation(clause, pair, f"{what} is not complete")


def _require_empty(g: Graph, a: int, b: int, clause: str, what: str) -> None:
    pair = _first_edge(g, a, b)
    if pair is not None:
        raise Violation(clause, pair, f"{what} is not empty")


def _require_clique(g: Graph, m: int, clause: str, what: str) -> None:
    pair = _first_non_edge(g, m, m)
    if pair is not None:
        raise Violation(clause, pair, f"{what} is not a clique")


def _require_partition(g: Graph, parts: dict[str, int], clause: str) -> None:
    seen = 0
    for name, m in parts.items():
        if m >> g.n:
            raise Violation(clause, [v for v in iter_bits(m) if v >= g.n], f"{name} has vertices out of range")
        if m & seen:
            raise Violation(clause, iter_bits(m & seen), f"{name} overlaps an earlier part")
        seen |= m
    if seen != g.full:
        raise Violation(clause, iter_bits(g.full & ~seen), "parts do not cover V(G)")


def _free_check(g: Graph, mask: int, kinds: tuple[str, ...], clause: str) -> None:
    sub, back = induced_subgraph(g, mask)
    ok, w = is_free_of(sub, kinds)
    if not ok:
        raise Violation(clause, [back[v] for v in w.vertices], f"contains an induced {w.kind}")


def _set_json(g: Graph, m: int | Iterable[int]) -> dict:
    members = list(iter_bits(m)) if isinstance(m, int) else sorted(m)
    out: dict = {"vertices": members}
    if g.labels is not None:
        out["labels"] = [g.label(v) for v in members]
    return out


def _check_hole(g: Graph, hole: tuple[int, ...], k: int) -> None:
    if len(hole) != k or len(set(hole)) != k:
        raise GraphError(f"a C{k} needs {k} distinct vertices")
    for v in hole:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    for i in range(k):
        for j in range(i + 1, k):
            want = (j - i) % k in (1, k - 1)
            if g.has_edge(hole[i], hole[j]) != want:
                raise GraphError(f"vertices {list(hole)} do not induce C{k} in this order")


# ---------------------------------------------------------------- C5 partition

@dataclass(frozen=True)
class C5Partition:
    hole: tuple[int, ...]
    A: int
    T: tuple[int, ...]
    W: tuple[int, ...]
    X: tuple[int, ...]
    leftover: int

    @property
    def hole_mask(self) -> int:
        return to_mask(self.hole)

    def sets(self) -> dict[str, int]:
        out = {"A": self.A}
        for i in range(5):
            out[f"T{i + 1}"] = self.T[i]
            out[f"W{i + 1}"] = self.W[i]
            out[f"X{i + 1}{(i + 1) % 5 + 1}"] = self.X[i]
        out["leftover"] = self.leftover
        return out

    def to_json(self, g: Graph) -> dict:
        return {"hole": list(self.hole), "sets": {k: _set_json(g, m) for k, m in self.sets().items()}}


def partition_around_c5(g: Graph, hole: Iterable[int]) -> C5Partition:
    """Sort every vertex off the hole by its trace on the hole."""
    hole = tuple(hole)
    _check_hole(g, hole, 5)
    pos = {v: i for i, v in enumerate(hole)}
    cmask = to_mask(hole)
    a = left = 0
    t, w, x = [0] * 5, [0] * 5, [0] * 5
    for v in iter_bits(g.full & ~cmask):
        idx = frozenset(pos[u] for u in iter_bits(g.masks[v] & cmask))
        bit = 1 << v
        if not idx:
            left |= bit
        elif len(idx) == 5:
            a |= bit
        elif len(idx) == 1:
            w[next(iter(idx))] |= bit
        elif len(idx) == 2 and any(idx == {i, (i + 1) % 5} for i in range(5)):
            i = next(i for i in range(5) if idx == {i, (i + 1) % 5})
            x[i] |= bit
        elif len(idx) == 3 and any(idx == {(i - 1) % 5, i, (i + 1) % 5} for i in range(5)):
            i = next(i for i in range(5) if idx == {(i - 1) % 5, i, (i + 1) % 5})
            t[i] |= bit
        else:
            raise Violation("c5.trace", (v,), f"trace {sorted(i + 1 for i in idx)} on the hole forces a C4")
    return C5Partition(hole, a, tuple(t), tuple(w), tuple(x), left)


def check_c5_partition(g: Graph, p: C5Partition, c6_free: bool = False, cutset_free: bool = False) -> None:
    """Assert the emptiness, completeness and clique relations of a C5 partition."""
    T, W, X, A = p.T, p.W, p.X, p.A
    for i in range(5):
        _require_clique(g, A | T[i], "c5.a", f"A u T{i + 1}")
    for i in range(5):
        j = lambda d: (i + d) % 5  # noqa: E731
        _require_empty(g, T[i], T[j(2)], "c5.b", f"[T{i + 1}, T{j(2) + 1}]")
        _require_empty(g, X[i], X[j(2)], "c5.b", f"[X{i + 1}, X{j(2) + 1}]")
        _require_empty(g, W[i], W[j(1)], "c5.b", f"[W{i + 1}, W{j(1) + 1}]")
        _require_empty(g, T[i], W[j(-2)] | W[j(2)], "c5.b", f"[T{i + 1}, W]")
        _require_empty(g, T[i], X[j(2)], "c5.b", f"[T{i + 1}, X]")
        _require_empty(g, X[i], W[i] | W[j(1)], "c5.b", f"[X, W{i + 1}]")
        _require_complete(g, X[i], X[j(1)], "c5.c", f"[X{i + 1}, X{j(1) + 1}]")
        _require_complete(g, W[i], W[j(2)], "c5.c", f"[W{i + 1}, W{j(2) + 1}]")
        _require_complete(g, X[i], W[j(-1)] | W[j(2)], "c5.c", f"[X{i + 1}, W]")
        if c6_free:
            if X[i] and X[j(1)]:
                raise Violation("c5.d", (next(iter_bits(X[i])), next(iter_bits(X[j(1)]))), "consecutive X sets")
            if W[i] and W[j(2)]:
                raise Violation("c5.d", (next(iter_bits(W[i])), next(iter_bits(W[j(2)]))), "W sets two apart")
            if X[i] and (W[j(-1)] | W[j(2)]):
                raise Violation("c5.d", (next(iter_bits(X[i])), next(iter_bits(W[j(-1)] | W[j(2)]))),
                                "X set with a facing W set")
        if cutset_free:
            _require_complete(g, T[i], W[i], "c5.e", f"[T{i + 1}, W{i + 1}]")
    if cutset_free and p.leftover:
        raise Violation("c5.e", iter_bits(p.leftover), "vertices with no neighbour on the hole")


# ---------------------------------------------------------------- C6 partition

@dataclass(frozen=True)
class C6Partition:
    hole: tuple[int, ...]
    S: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    D: tuple[int, ...]  # D[i] == D[i + 3]
    L: int

    def sets(self) -> dict[str, int]:
        out = {"S": self.S, "L": self.L}
        for i in range(6):
            out[f"A{i + 1}"] = self.A[i]
            out[f"B{i + 1}"] = self.B[i]
        for i in range(3):
            out[f"D{i + 1}"] = self.D[i]
        return out

    def to_json(self, g: Graph) -> dict:
        return {"hole": list(self.hole), "sets": {k: _set_json(g, m) for k, m in self.sets().items()}}


def partition_around_c6(g: Graph, hole: Iterable[int]) -> C6Partition:
    hole = tuple(hole)
    _check_hole(g, hole, 6)
    pos = {v: i for i, v in enumerate(hole)}
    cmask = to_mask(hole)
    s = left = 0
    a, b, d = [0] * 6, [0] * 6, [0] * 3
    for v in iter_bits(g.full & ~cmask):
        idx = frozenset(pos[u] for u in iter_bits(g.masks[v] & cmask))
        bit = 1 << v
        if not idx:
            left |= bit
        elif len(idx) == 6:
            s |= bit
        elif len(idx) == 3 and any(idx == {(i - 1) % 6, i, (i + 1) % 6} for i in range(6)):
            a[next(i for i in range(6) if idx == {(i - 1) % 6, i, (i + 1) % 6})] |= bit
        elif len(idx) == 4 and any(idx == {(i - 1) % 6, i, (i + 1) % 6, (i + 2) % 6} for i in range(6)):
            b[next(i for i in range(6) if idx == {(i - 1) % 6, i, (i + 1) % 6, (i + 2) % 6})] |= bit
        elif len(idx) == 2 and any(idx == {i, i + 3} for i in range(3)):
            d[next(i for i in range(3) if idx == {i, i + 3})] |= bit
        elif len(idx) <= 2:
            raise Violation("c6.trace", (v,), f"trace {sorted(i + 1 for i in idx)} on the hole forces a P6")
        else:
            raise Violation("c6.trace", (v,), f"trace {sorted(i + 1 for i in idx)} on the hole forces a C4")
    return C6Partition(hole, s, tuple(a), tuple(b), tuple(d + d), left)


def check_c6_partition(g: Graph, p: C6Partition) -> None:
    A, B, D, S = p.A, p.B, p.D, p.S
    for i in range(6):
        j = lambda k: (i + k) % 6  # noqa: E731
        _require_clique(g, A[i] | B[i] | B[j(5)], "c6.b", f"A{i + 1} u B{i + 1} u B{j(5) + 1}")
        _require_clique(g, D[i], "c6.b", f"D{i % 3 + 1}")
        _require_complete(g, A[i], A[j(1)] | A[j(5)] | D[i], "c6.c", f"[A{i + 1}, ...]")
        _require_complete(g, B[i], B[j(1)] | B[j(3)] | B[j(5)] | D[j(2)], "c6.c", f"[B{i + 1}, ...]")
        _require_complete(g, S, A[i] | B[i] | D[i], "c6.c", "[S, A u B u D]")
        _require_empty(g, A[i], A[j(3)] | B[j(2)] | B[j(3)] | D[j(1)] | D[j(2)], "c6.d", f"[A{i + 1}, ...]")
        _require_empty(g, B[i], B[j(2)] | B[j(4)], "c6.d", f"[B{i + 1}, ...]")
        _require_empty(g, D[i], D[j(1)], "c6.d", f"[D{i % 3 + 1}, D{j(1) % 3 + 1}]")
        if B[i] and (D[i] | D[j(1)]):
            raise Violation("c6.e", (next(iter_bits(B[i])), next(iter_bits(D[i] | D[j(1)]))), "B with D")
        if B[i] and B[j(1)] and (B[j(3)] | B[j(4)]):
            raise Violation("c6.f", (next(iter_bits(B[i])), next(iter_bits(B[j(3)] | B[j(4)]))),
                            "consecutive B sets with an opposite B set")
    _require_clique(g, S, "c6.b", "S")


# ---------------------------------------------------------------- parts and certificates

BAND_NAMES = ("Q1", "Q2", "Q3", "Q4", "Q5", "R2", "R3")


@dataclass(frozen=True)
class BandParts:
    Q1: frozenset[int]
    Q2: frozenset[int]
    Q3: frozenset[int]
    Q4: frozenset[int]
    Q5: frozenset[int]
    R2: frozenset[int]
    R3: frozenset[int]

    def masks(self) -> dict[str, int]:
        return {name: to_mask(getattr(self, name)) for name in BAND_NAMES}

    @classmethod
    def from_masks(cls, parts: dict[str, int]) -> "BandParts":
        return cls(**{name: frozenset(iter_bits(parts[name])) for name in BAND_NAMES})


class BeltParts(BandParts):
    """Same seven names as a band, different axioms."""


@dataclass(frozen=True)
class BoilerRefinement:
    """Ordering data for a boiler whose L is not a clique."""

    a_l: frozenset[int]
    a_l_prime: frozenset[int]
    j: int  # 1-based block index
    prefix: tuple[tuple[int, int], ...]  # (A-vertex, number of leading blocks it is complete to)

    def to_json(self) -> dict:
        return {"A_L": sorted(self.a_l), "A_L_prime": sorted(self.a_l_prime), "j": self.j,
                "prefix": {str(a): p for a, p in self.prefix}}


@dataclass(frozen=True)
class BoilerParts:
    Q: frozenset[int]
    A: frozenset[int]
    B: frozenset[int]
    L: frozenset[int]
    M: frozenset[int]
    m_blocks: tuple[frozenset[int], ...]
    b_blocks: tuple[frozenset[int], ...]
    b_star: int
    m_star: int
    refinement: BoilerRefinement | None = None

    @property
    def k(self) -> int:
        return len(self.m_blocks)

    def masks(self) -> dict[str, int]:
        return {name: to_mask(getattr(self, name)) for name in ("Q", "A", "B", "L", "M")}


CLIQUE_CUTSET = "CliqueCutset"
UNIVERSAL_VERTEX = "UniversalVertex"
BLOWUP = "Blowup"
BAND = "Band"
BELT = "Belt"
BOILER = "Boiler"
CHORDAL_LEAF = "ChordalLeaf"
TAGS = (CLIQUE_CUTSET, UNIVERSAL_VERTEX, BLOWUP, BAND, BELT, BOILER, CHORDAL_LEAF)


@dataclass(frozen=True)
class CutsetPayload:
    clique: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class StructureCertificate:
    """Tagged certificate; ``payload`` type depends on ``tag``.

    CliqueCutset -> CutsetPayload, UniversalVertex -> frozenset of universal
    vertices, Blowup -> BlowupMap, Band -> BandParts, Belt -> BeltParts,
    Boiler -> BoilerParts, ChordalLeaf -> EliminationOrder.
    """

    tag: str
    payload: object
    provenance: str
    notes: dict = field(default_factory=dict, compare=False)

    def to_json(self, g: Graph) -> dict:
        out: dict = {"schema": SCHEMA_VERSION, "tag": self.tag, "provenance": self.provenance}
        p = self.payload
        if self.tag == CLIQUE_CUTSET:
            out["parts"] = {"K": _set_json(g, p.clique), "side_a": _set_json(g, p.side_a),
                            "side_b": _set_json(g, p.side_b)}
        elif self.tag == UNIVERSAL_VERTEX:
            out["parts"] = {"universal": _set_json(g, p)}
        elif self.tag == BLOWUP:
            out["blowup"] = p.to_json(g)
            out["blowup"]["base_graph"] = {"n": p.base.n, "labels": [p.base.label(i) for i in range(p.base.n)],
                                           "edges": [list(e) for e in p.base.edges()]}
        elif self.tag in (BAND, BELT):
            out["parts"] = {name: _set_json(g, getattr(p, name)) for name in BAND_NAMES}
        elif self.tag == BOILER:
            out["parts"] = {name: _set_json(g, getattr(p, name)) for name in ("Q", "A", "B", "L", "M")}
            out["k"] = p.k
            out["M_blocks"] = [sorted(b) for b in p.m_blocks]
            out["B_blocks"] = [sorted(b) for b in p.b_blocks]
            out["b_star"] = p.b_star
            out["m_star"] = p.m_star
            out["refinement"] = p.refinement.to_json() if p.refinement is not None else None
        elif self.tag == CHORDAL_LEAF:
            out["elimination_order"] = list(p.order)
        if self.notes:
            out["notes"] = _jsonable(self.notes, g)
        return out


def _jsonable(obj, g: Graph):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, g) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, g) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def certificate_from_json(data: dict) -> StructureCertificate:
    """Inverse of :meth:`StructureCertificate.to_json`; raises GraphError on schema mismatch."""
    if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
        raise GraphError(f"unsupported certificate schema {data.get('schema') if isinstance(data, dict) else None!r}")
    tag = data.get("tag")
    if tag not in TAGS:
        raise GraphError(f"unknown certificate tag {tag!r}")
    prov = data.get("provenance", "")

    def fs(name: str) -> frozenset[int]:
        try:
            return frozenset(int(v) for v in data["parts"][name]["vertices"])
        except (KeyError, TypeError, ValueError):
            raise GraphError(f"certificate is missing part {name!r}") from None

    try:
        if tag == CLIQUE_CUTSET:
            payload: object = CutsetPayload(fs("K"), fs("side_a"), fs("side_b"))
        elif tag == UNIVERSAL_VERTEX:
            payload = fs("universal")
        elif tag == BLOWUP:
            bl = data["blowup"]
            bg = bl["base_graph"]
            base = build_graph(bg["n"], [tuple(e) for e in bg["edges"]], bg["labels"])
            bags = tuple(frozenset(bl["bags"][base.label(i)]["vertices"]) for i in range(base.n))
            payload = BlowupMap(bl["base"], base, bags)
        elif tag in (BAND, BELT):
            cls = BandParts if tag == BAND else BeltParts
            payload = cls(**{name: fs(name) for name in BAND_NAMES})
        elif tag == BOILER:
            ref = data.get("refinement")
            refinement = None
            if ref is not None:
                refinement = BoilerRefinement(frozenset(ref["A_L"]), frozenset(ref["A_L_prime"]), int(ref["j"]),
                                              tuple(sorted((int(a), int(p)) for a, p in ref["prefix"].items())))
            payload = BoilerParts(fs("Q"), fs("A"), fs("B"), fs("L"), fs("M"),
                                  tuple(frozenset(b) for b in data["M_blocks"]),
                                  tuple(frozenset(b) for b in data["B_blocks"]),
                                  int(data["b_star"]), int(data["m_star"]), refinement)
        else:
            payload = EliminationOrder(tuple(int(v) for v in data["elimination_order"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed {tag} certificate: {exc}") from None
    return StructureCertificate(tag, payload, prov)


# ---------------------------------------------------------------- validators

def check_band(g: Graph, parts: dict[str, int]) -> None:
    _require_partition(g, parts, "band.partition")
    q1, q2, q3, q4, q5, r2, r3 = (parts[n] for n in BAND_NAMES)
    for name in BAND_NAMES:
        _require_clique(g, parts[name], "band.cliques", name)
    _require_complete(g, q5, q1 | q4, "band.complete", "[Q5, Q1 u Q4]")
    _require_complete(g, r2, q1 | q2 | q3, "band.complete", "[R2, Q1 u Q2 u Q3]")
    _require_complete(g, r3, q2 | q3 | q4, "band.complete", "[R3, Q2 u Q3 u Q4]")
    _require_complete(g, q2, q3, "band.complete", "[Q2, Q3]")
    _require_empty(g, q1, q3 | r3 | q4, "band.empty", "[Q1, Q3 u R3 u Q4]")
    _require_empty(g, q4, q1 | q2 | r2, "band.empty", "[Q4, Q1 u Q2 u R2]")
    _require_empty(g, q5, q2 | r2 | q3 | r3, "band.empty", "[Q5, Q2 u R2 u Q3 u R3]")
    for a, b, what in ((q1, q2, "{Q1, Q2}"), (q3, q4, "{Q3, Q4}"), (r2, r3, "{R2, R3}")):
        bad = is_graded(g, a, b)
        if bad is not None:
            raise Violation("band.graded", bad, f"pair {what} is not graded")


def check_belt(g: Graph, parts: dict[str, int]) -> None:
    _require_partition(g, parts, "belt.partition")
    q1, q2, q3, q4, q5, r2, r3 = (parts[n] for n in BAND_NAMES)
    for name in ("Q1", "Q2", "Q3", "Q4", "Q5"):
        _require_clique(g, parts[name], "belt.cliques", name)
    _require_complete(g, q1, q2 | r2 | q5, "belt.complete", "[Q1, Q2 u R2 u Q5]")
    _require_complete(g, q4, q3 | r3 | q5, "belt.complete", "[Q4, Q3 u R3 u Q5]")
    _require_empty(g, q1, q3 | r3 | q4, "belt.empty", "[Q1, Q3 u R3 u Q4]")
    _require_empty(g, q4, q2 | r2 | q1, "belt.empty", "[Q4, Q2 u R2 u Q1]")
    _require_empty(g, q5, q2 | r2 | q3 | r3, "belt.empty", "[Q5, Q2 u R2 u Q3 u R3]")
    for j, (qj, rj, other) in {2: (q2, r2, q3 | r3), 3: (q3, r3, q2 | r2)}.items():
        _require_complete(g, qj, rj, "belt.fourth.complete", f"[Q{j}, R{j}]")
        for v in iter_bits(qj | rj):
            if not g.masks[v] & other:
                raise Violation("belt.fourth.neighbor", (v,), f"no neighbour in Q{5 - j} u R{5 - j}")
        uni = universal_mask(g, rj)
        if uni:
            raise Violation("belt.fourth.no_universal", iter_bits(uni), f"R{j} has a universal vertex")
    _free_check(g, g.full, ("C4", "P6", "C6"), "belt.free")
    # derived properties
    for j, (rj, qo) in {2: (r2, q3), 3: (r3, q2)}.items():
        for u in iter_bits(rj):
            for v in iter_bits(rj & ~g.masks[u] & ~((1 << (u + 1)) - 1)):
                common = g.masks[u] & g.masks[v] & qo
                if common:
                    raise Violation("belt.derived.shared_neighbor", (u, v, next(iter_bits(common))),
                                    f"non-adjacent R{j} vertices share a Q{5 - j} neighbour")
    _require_empty(g, r2, r3, "belt.derived.r2r3_empty", "[R2, R3]")
    for j, (qj, ro, qo) in {2: (q2, r3, q3), 3: (q3, r2, q2)}.items():
        for v in iter_bits(qj):
            if g.masks[v] & ro and qo & ~g.masks[v]:
                raise Violation("belt.derived.q_complete", (v, next(iter_bits(qo & ~g.masks[v]))),
                                f"Q{j} vertex with an R{5 - j} neighbour is not complete to Q{5 - j}")
    for rj in (r2, r3):
        _free_check(g, rj, ("P4", "2P3"), "belt.derived.p4_2p3_free")


def boiler_blocks(g: Graph, m: int, b: int) -> tuple[list[int], list[int]]:
    """Finest split of M and B into blocks: M components joined when they share a B-neighbour."""
    comps = components_mask(g, m)
    groups: list[tuple[int, int]] = []  # (M part, B neighbourhood)
    for c in comps:
        nb = _nbrs(g, c) & b
        merged_m, merged_b = c, nb
        keep = []
        for gm, gb in groups:
            if gb & merged_b:
                merged_m |= gm
                merged_b |= gb
            else:
                keep.append((gm, gb))
        # a merge can create new overlaps, so repeat until stable
        changed = True
        while changed:
            changed = False
            rest = []
            for gm, gb in keep:
                if gb & merged_b:
                    merged_m |= gm
                    merged_b |= gb
                    changed = True
                else:
                    rest.append((gm, gb))
            keep = rest
        groups = keep + [(merged_m, merged_b)]
    groups.sort(key=lambda t: (t[0] & -t[0]))
    return [gm for gm, _ in groups], [gb for _, gb in groups]


def boiler_prefix(g: Graph, a: int, blocks: list[int]) -> int | None:
    """Number of leading blocks ``a`` is complete to, or None if not a prefix pattern."""
    flags = []
    for blk in blocks:
        seen = g.masks[a] & blk
        if seen == blk:
            flags.append(True)
        elif seen == 0:
            flags.append(False)
        else:
            return None
    p = flags.index(False) if False in flags else len(flags)
    return p if not any(flags[p:]) else None


def refine_boiler(g: Graph, parts: dict[str, int], m_blocks: list[int], b_blocks: list[int]
                  ) -> tuple[list[int], list[int], int, int, BoilerRefinement | None]:
    """Order blocks so that the refinement holds; return blocks, b*, m* and the ordering data."""
    a, b, l_, m = parts["A"], parts["B"], parts["L"], parts["M"]
    anti = [v for v in iter_bits(b) if not g.masks[v] & a]
    if not anti:
        raise Violation("boiler.refine.b_star", (), "no vertex of B is anticomplete to A")
    b_star = anti[0]
    m_star = next(iter_bits(g.masks[b_star] & m), -1)
    if m_star < 0:
        raise Violation("boiler.blocks", (b_star,), "vertex of B without a neighbour in M")
    idx = list(range(len(m_blocks)))
    full_blocks = [i for i in idx if all(((g.masks[v] & (m_blocks[i] | b_blocks[i])) ==
                                          (m_blocks[i] | b_blocks[i])) for v in iter_bits(a))]
    star_block = next(i for i in idx if b_blocks[i] >> b_star & 1)
    head = [i for i in full_blocks if i != star_block][:2]
    rest = [i for i in idx if i not in head and i != star_block]

    def complete_count(i: int) -> int:
        blk = m_blocks[i] | b_blocks[i]
        return sum(1 for v in iter_bits(a) if g.masks[v] & blk == blk)

    rest.sort(key=lambda i: (-complete_count(i), m_blocks[i] & -m_blocks[i]))
    order = head + rest + [star_block]
    mb = [m_blocks[i] for i in order]
    bb = [b_blocks[i] for i in order]
    refinement = None
    if not g.is_clique(l_):
        u = universal_mask(g, l_)
        a_l = sum(1 << v for v in iter_bits(a) if g.masks[v] & l_)
        a_lp = sum(1 << v for v in iter_bits(a) if g.masks[v] & l_ & ~u)
        blocks = [x | y for x, y in zip(mb, bb)]
        prefix = []
        for v in iter_bits(a):
            p = boiler_prefix(g, v, blocks)
            prefix.append((v, -1 if p is None else p))
        k = len(order)
        j = k
        for i in range(2, k):
            blk = blocks[i]
            if any(g.masks[v] & blk == 0 for v in iter_bits(a)):
                j = i + 1
                break
        refinement = BoilerRefinement(frozenset(iter_bits(a_l)), frozenset(iter_bits(a_lp)), j, tuple(prefix))
    return mb, bb, b_star, m_star, refinement


def check_boiler(g: Graph, p: BoilerParts) -> None:
    parts = p.masks()
    _require_partition(g, parts, "boiler.partition")
    q, a, b, l_, m = (parts[n] for n in ("Q", "A", "B", "L", "M"))
    for name in ("Q", "A", "B", "M"):
        if not parts[name]:
            raise Violation("boiler.nonempty", (), f"{name} is empty")
    for name in ("Q", "A", "B"):
        _require_clique(g, parts[name], "boiler.cliques", name)
    _require_complete(g, q, a | m, "boiler.complete", "[Q, A u M]")
    _require_complete(g, b, l_, "boiler.complete", "[B, L]")
    _require_empty(g, q, b | l_, "boiler.empty", "[Q, B u L]")
    _require_empty(g, l_, m, "boiler.empty", "[L, M]")
    _free_check(g, l_, ("P4", "2P3"), "boiler.p4_2p3_free")
    _free_check(g, m, ("P4", "2P3"), "boiler.p4_2p3_free")
    for v in iter_bits(l_):
        if not g.masks[v] & a:
            raise Violation("boiler.l_has_a_neighbor", (v,), "vertex of L without a neighbour in A")
    k = p.k
    if k < 3 or len(p.b_blocks) != k:
        raise Violation("boiler.block_count", (), f"need k >= 3 matching blocks, got {k} and {len(p.b_blocks)}")
    mb = [to_mask(x) for x in p.m_blocks]
    bb = [to_mask(x) for x in p.b_blocks]
    _require_partition(g, dict({f"M{i + 1}": x for i, x in enumerate(mb)}, rest=g.full & ~m), "boiler.blocks")
    _require_partition(g, dict({f"B{i + 1}": x for i, x in enumerate(bb)}, rest=g.full & ~b), "boiler.blocks")
    for i in range(k):
        if not mb[i] or not bb[i]:
            raise Violation("boiler.blocks", (), f"block {i + 1} is empty")
        for j in range(i + 1, k):
            _require_empty(g, mb[i], mb[j], "boiler.blocks", f"[M{i + 1}, M{j + 1}]")
        for v in iter_bits(mb[i]):
            if not g.masks[v] & bb[i]:
                raise Violation("boiler.blocks", (v,), f"vertex of M{i + 1} without a neighbour in B{i + 1}")
            if g.masks[v] & b & ~bb[i]:
                raise Violation("boiler.blocks", (v, next(iter_bits(g.masks[v] & b & ~bb[i]))),
                                f"vertex of M{i + 1} sees B outside B{i + 1}")
    for v in iter_bits(b):
        if not g.masks[v] & m:
            raise Violation("boiler.blocks", (v,), "vertex of B without a neighbour in M")
    _require_complete(g, a, mb[0] | bb[0] | mb[1] | bb[1], "boiler.a_blocks", "[A, M1 u B1 u M2 u B2]")
    for i in range(2, k):
        blk = mb[i] | bb[i]
        for v in iter_bits(a):
            seen = g.masks[v] & blk
            if seen and seen != blk:
                raise Violation("boiler.a_blocks", (v, next(iter_bits(blk & ~seen))),
                                f"A vertex neither complete nor anticomplete to block {i + 1}")
    for v in iter_bits(a):
        if b & ~g.masks[v] == 0:
            raise Violation("boiler.a_blocks", (v,), "A vertex complete to B")
    _free_check(g, g.full, ("C4", "P6", "C6"), "boiler.free")
    # refinement data
    if not (b >> p.b_star & 1) or g.masks[p.b_star] & a:
        raise Violation("boiler.refine.b_star", (p.b_star,), "b* must be in B and anticomplete to A")
    if not (m >> p.m_star & 1) or not g.has_edge(p.b_star, p.m_star) or g.masks[p.m_star] & a:
        raise Violation("boiler.refine.m_star", (p.m_star,), "m* must be an M-neighbour of b* anticomplete to A")
    if g.is_clique(l_):
        return
    ref = p.refinement
    if ref is None:
        raise Violation("boiler.refine.missing", (), "L is not a clique but no ordering data is given")
    u = universal_mask(g, l_)
    a_l = sum(1 << v for v in iter_bits(a) if g.masks[v] & l_)
    a_lp = sum(1 << v for v in iter_bits(a) if g.masks[v] & l_ & ~u)
    if to_mask(ref.a_l) != a_l or to_mask(ref.a_l_prime) != a_lp:
        raise Violation("boiler.refine.sets", iter_bits(a_l ^ to_mask(ref.a_l) | a_lp ^ to_mask(ref.a_l_prime)),
                        "A_L or A'_L disagree with the graph")
    j = ref.j
    if not 3 <= j <= k:
        raise Violation("boiler.refine.j", (), f"j={j} outside 3..{k}")
    blocks = [x | y for x, y in zip(mb, bb)]
    before_j = 0
    for blk in blocks[:j - 1]:
        before_j |= blk
    after_j = 0
    for blk in blocks[j - 1:]:
        after_j |= blk
    last = blocks[-1]
    for v in iter_bits(a):
        pre = boiler_prefix(g, v, blocks)
        if a_lp >> v & 1:
            _require_complete(g, 1 << v, (m | b) & ~last, "boiler.refine.ii", "A'_L vertex to blocks before k")
            _require_empty(g, 1 << v, last, "boiler.refine.ii", "A'_L vertex to block k")
        elif a_l >> v & 1:
            if pre is None or not j - 1 <= pre <= k - 1:
                raise Violation("boiler.refine.i", (v,), f"prefix {pre} outside {j - 1}..{k - 1}")
        else:
            _require_complete(g, 1 << v, before_j, "boiler.refine.iii", "A \\ A_L to blocks before j")
            _require_empty(g, 1 << v, after_j, "boiler.refine.iii", "A \\ A_L to blocks from j")


def check_certificate(g: Graph, cert: StructureCertificate) -> None:
    """Raise :class:`Violation` naming the first clause the certificate breaks."""
    p = cert.payload
    if cert.tag == CLIQUE_CUTSET:
        k, sa, sb = to_mask(p.clique), to_mask(p.side_a), to_mask(p.side_b)
        _require_partition(g, {"K": k, "side_a": sa, "side_b": sb}, "cutset.partition")
        _require_clique(g, k, "cutset.clique", "K")
        if not sa or not sb:
            raise Violation("cutset.sides", (), "a side is empty")
        _require_empty(g, sa, sb, "cutset.separates", "[side_a, side_b]")
    elif cert.tag == UNIVERSAL_VERTEX:
        if not p:
            raise Violation("universal.nonempty", (), "no vertex given")
        for v in p:
            if not 0 <= v < g.n or g.full & ~g.masks[v] & ~(1 << v):
                raise Violation("universal.adjacent_to_all", (v,), "vertex is not universal")
    elif cert.tag == BLOWUP:
        validate_blowup(g, p)
    elif cert.tag == BAND:
        check_band(g, p.masks())
    elif cert.tag == BELT:
        check_belt(g, p.masks())
    elif cert.tag == BOILER:
        check_boiler(g, p)
    elif cert.tag == CHORDAL_LEAF:
        order = list(p.order)
        if sorted(order) != list(range(g.n)):
            raise Violation("chordal.permutation", (), "order is not a permutation of V(G)")
        ok, bad = is_peo(g, order)
        if not ok:
            raise Violation("chordal.peo", (bad,), "later neighbours do not form a clique")
    else:
        raise Violation("certificate.tag", (), f"unknown tag {cert.tag!r}")


def validate_certificate(g: Graph, cert: StructureCertificate) -> tuple[bool, Violation | None]:
    try:
        check_certificate(g, cert)
    except Violation as v:
        return False, v
    return True, None


# ---------------------------------------------------------------- classifier branches

def _bags(g: Graph, base: Graph, name: str, bags: dict[str, int]) -> BlowupMap:
    out = tuple(frozenset(iter_bits(bags.get(base.label(i), 0))) for i in range(base.n))
    return BlowupMap(name, base, out)


def _f3_branch(g: Graph, w: Witness) -> StructureCertificate:
    hole = w.vertices[:6]
    x, y, z = w.vertices[6:]
    p = partition_around_c6(g, hole)
    v = [1 << u for u in hole]

    def split(i: int, others: int) -> tuple[int, int]:
        keep = v[i]
        far = 0
        for u in iter_bits(p.A[i]):
            if g.masks[u] & others:
                far |= 1 << u
            else:
                keep |= 1 << u
        return keep, far

    a2, xs = split(1, (1 << y) | (1 << z))
    a4, ys = split(3, (1 << z) | (1 << x))
    a6, zs = split(5, (1 << x) | (1 << y))
    bags = {"v1": p.A[0] | v[0], "v2": a2, "v3": p.A[2] | v[2], "v4": a4, "v5": p.A[4] | v[4], "v6": a6,
            "x": xs, "y": ys, "z": zs}
    bm = _bags(g, named.f3(), "F3", bags)
    return StructureCertificate(BLOWUP, bm, "f3_blowup", {"hole": list(hole), "c6_partition": p.sets()})


def _band_branch(g: Graph, w: Witness) -> StructureCertificate:
    hole = w.vertices[:5]
    p = partition_around_c5(g, hole)
    v = [1 << u for u in hole]
    T, X = p.T, p.X
    x23 = X[1]
    y1 = sum(1 << u for u in iter_bits(x23) if not g.masks[u] & T[3])
    y4 = x23 & ~y1
    q1, q4, q5 = v[0] | T[0], v[3] | T[3], v[4] | T[4]
    s2 = T[1] | v[1] | X[0] | y1
    s3 = T[2] | v[2] | X[2] | y4
    r2 = sum(1 << u for u in iter_bits(s2) if q1 & ~g.masks[u] == 0)
    r3 = sum(1 << u for u in iter_bits(s3) if q4 & ~g.masks[u] == 0)
    parts = {"Q1": q1, "Q2": s2 & ~r2, "Q3": s3 & ~r3, "Q4": q4, "Q5": q5, "R2": r2, "R3": r3}
    return StructureCertificate(BAND, BandParts.from_masks(parts), "f1_band",
                                {"hole": list(hole), "c5_partition": p.sets()})


def _c6_branch(g: Graph, hole: tuple[int, ...]) -> StructureCertificate:
    p = partition_around_c6(g, hole)
    notes = {"hole": list(hole), "c6_partition": p.sets()}
    if p.L:
        base, case = "H1", "not_dominating"
    else:
        nonempty = [bool(b) for b in p.B]
        if not any(nonempty):
            base, case = "H1", "no_B"
        elif any(nonempty[i] and nonempty[(i + 1) % 6] for i in range(6)):
            base, case = "H4", "consecutive_B"
        else:
            i = nonempty.index(True)
            if nonempty[(i + 3) % 6] or not (nonempty[(i + 2) % 6] or nonempty[(i + 4) % 6]):
                base, case = "H2", "isolated_B"
            else:
                base, case = "H3", "B_two_apart"
    notes["case"] = case
    bm = match_blowup(g, base)
    if bm is None:
        raise StructureFailure(f"C6 branch chose {base} but the graph is not a blowup of it", notes)
    return StructureCertificate(BLOWUP, bm, f"c6_blowup_{base}", notes)


def _f2_branch(g: Graph, w: Witness) -> StructureCertificate:
    hole = tuple(w.vertices[:5])
    p = partition_around_c5(g, hole)
    if p.W[3] and not p.W[0]:
        hole = (hole[3], hole[2], hole[1], hole[0], hole[4])
        p = partition_around_c5(g, hole)
    v = [1 << u for u in hole]
    T, X, W = p.T, p.X, p.W
    x12, x34 = X[0], X[2]

    def complete_to(m: int, target: int) -> int:
        return sum(1 << u for u in iter_bits(m) if target & ~g.masks[u] == 0)

    q1, q4 = v[0] | T[0], v[3] | T[3]
    q2 = v[1] | complete_to(T[1], x12)
    r2 = T[1] & ~q2
    q3 = v[2] | complete_to(T[2], x34)
    r3 = T[2] & ~q3
    q5 = complete_to(T[4], x12 | x34)
    r5 = v[4] | (T[4] & ~q5)
    notes = {"hole": list(hole), "c5_partition": p.sets()}
    if not W[0]:
        bm = match_blowup(g, "H5")
        if bm is None:
            raise StructureFailure("F2 branch without W sets is not an H5 blowup", notes)
        return StructureCertificate(BLOWUP, bm, "f2_blowup_H5", notes)
    r_comps, x_comps = [], []
    for z in components_mask(g, W[0]):
        nb = _nbrs(g, z)
        if nb & r2:
            r_comps.append((z, nb & r2))
        else:
            x_comps.append((z, nb & x34))
    k, l_ = len(r_comps) + 1, len(x_comps) + 1
    bags: dict[str, int] = {}
    used_r = used_x = 0
    for i, (z, sup) in enumerate(r_comps, start=1):
        bags[f"u{i}"], bags[f"a{i}"] = z, sup
        used_r |= sup
    bags[f"u{k}"], bags[f"a{k}"] = x12, q2
    bags["a0"] = r2 & ~used_r
    for j, (z, sup) in enumerate(x_comps, start=1):
        bags[f"w{j}"], bags[f"b{j}"] = z, sup
        used_x |= sup
    bags[f"w{l_}"], bags[f"b{l_}"] = r5, q4
    bags["b0"] = x34 & ~used_x
    bags["x"], bags["y"], bags["z"] = q1, q5, q3
    name = named.fkl_name(k, l_)
    bm = _bags(g, named.fkl(k, l_), name, bags)
    notes.update({"k": k, "l": l_, "R3": sorted(iter_bits(r3))})
    return StructureCertificate(BLOWUP, bm, "f2_blowup_F_k_l", notes)


def _c5_candidates(g: Graph) -> list[tuple[int, ...]]:
    """Induced C5s (one per vertex set, class-minimum representatives) sorted by |T| then id."""
    classes, quotient = clone_partition(g)
    reps = [(c & -c).bit_length() - 1 for c in classes]
    found = []
    for hit in iter_induced(quotient, named.c5()):
        if hit[0] != min(hit) or hit[1] > hit[4]:
            continue
        hole = tuple(reps[i] for i in hit)
        p = partition_around_c5(g, hole)
        size_t = sum(popcount(t) for t in p.T)
        found.append((size_t, hole))
    found.sort()
    return [h for _, h in found]


def _orientations(hole: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for seq in (hole, tuple(reversed(hole))):
        for r in range(5):
            out.append(seq[r:] + seq[:r])
    return out


def _final_branch_from(g: Graph, hole: tuple[int, ...]) -> StructureCertificate | None:
    p = partition_around_c5(g, hole)
    v = [1 << u for u in hole]
    T, X, W, A = p.T, p.X, p.W, p.A
    notes: dict = {"hole": list(hole)}
    if not any(X):
        bags = {f"v{i + 1}": v[i] | T[i] for i in range(5)}
        if A or any(W) or p.leftover:
            return None
        bm = _bags(g, named.c5(), "C5", bags)
        notes["c5_partition"] = p.sets()
        return StructureCertificate(BLOWUP, bm, "c5_blowup", notes)
    if X[1] | X[3] | X[4] or not X[2] or W[3]:
        return None
    if _first_edge(g, X[0] | X[2], T[4]) is not None:
        return None
    w1, x34 = W[0], X[2]
    w1t = sum(1 << u for u in iter_bits(w1) if g.masks[u] & T[1])
    w1n = w1 & ~w1t
    x34t = sum(1 << u for u in iter_bits(x34) if g.masks[u] & T[1])
    x34n = sum(1 << u for u in iter_bits(x34 & ~x34t) if g.masks[u] & w1)
    x340 = x34 & ~x34t & ~x34n
    notes.update({"c5_partition": p.sets(), "W1_T": w1t, "W1_N": w1n, "X34_T": x34t, "X34_N": x34n,
                  "X34_0": x340})
    if not x34n or not A:
        # with A empty, X34 is a clique and Q2 may be empty, which the belt definition allows
        q1, q4, q5 = v[0] | T[0], v[3] | T[3], v[4] | T[4]
        s2 = v[1] | T[1] | X[0] | w1
        s3 = v[2] | T[2] | x34
        q2 = universal_mask(g, s2)
        q3 = universal_mask(g, s3)
        parts = {"Q1": q1, "Q2": q2, "Q3": q3, "Q4": q4, "Q5": q5, "R2": s2 & ~q2, "R3": s3 & ~q3}
        return StructureCertificate(BELT, BeltParts.from_masks(parts), "c5_belt", notes)
    parts = {"Q": v[0] | T[0], "A": A, "B": v[2] | v[3] | T[2] | T[3] | x34t | x34n,
             "L": x340, "M": v[1] | v[4] | T[1] | T[4] | X[0] | w1}
    mb, bb = boiler_blocks(g, parts["M"], parts["B"])
    if len(mb) < 3:
        return None
    mb, bb, b_star, m_star, ref = refine_boiler(g, parts, mb, bb)
    bp = BoilerParts(*(frozenset(iter_bits(parts[n])) for n in ("Q", "A", "B", "L", "M")),
                     tuple(frozenset(iter_bits(x)) for x in mb), tuple(frozenset(iter_bits(x)) for x in bb),
                     b_star, m_star, ref)
    return StructureCertificate(BOILER, bp, "c5_boiler", notes)


def _fkl_match(g: Graph, notes: dict) -> StructureCertificate | None:
    """Exhibit ``g`` as a blowup of F_{k,l}: embed into a large F_{K,K}, then drop idle pairs."""
    big = len(clone_partition(g)[0])
    bm = match_blowup(g, named.fkl(big, big))
    if bm is None:
        return None
    bags = {bm.base.label(i): bag for i, bag in enumerate(bm.bags)}
    out: dict[str, int] = {}
    for side, partner in (("a", "u"), ("b", "w")):
        zero = to_mask(bags[f"{side}0"])
        kept = 0
        for i in range(1, big + 1):
            hub, leaf = to_mask(bags[f"{side}{i}"]), to_mask(bags[f"{partner}{i}"])
            if not leaf:
                zero |= hub
            else:
                kept += 1
                out[f"{side}{kept}"], out[f"{partner}{kept}"] = hub, leaf
        out[f"{side}0"] = zero
        if side == "a":
            k = kept
        else:
            l_ = kept
    for name in ("x", "y", "z"):
        out[name] = to_mask(bags[name])
    notes["case"] = "boiler_without_A"
    cert_map = _bags(g, named.fkl(k, l_), named.fkl_name(k, l_), out)
    return StructureCertificate(BLOWUP, cert_map, "c5_fkl_blowup", notes)


def _final_branch(g: Graph) -> StructureCertificate:
    tried = 0
    last: Violation | None = None
    for hole in _c5_candidates(g):
        for oriented in _orientations(hole):
            try:
                cert = _final_branch_from(g, oriented)
            except Violation as exc:
                last = exc
                cert = None
            if cert is None:
                continue
            tried += 1
            ok, why = validate_certificate(g, cert)
            if ok:
                cert.notes["orientations_tried"] = tried
                return cert
            last = why
    cert = _fkl_match(g, {})
    if cert is not None:
        ok, why = validate_certificate(g, cert)
        if ok:
            return cert
        last = why
    raise StructureFailure("no C5 yields a valid belt, boiler or C5 blowup",
                           {"attempts": tried, "last_violation": last.to_json() if last else None})


# ---------------------------------------------------------------- classify

def classify(g: Graph, check_free: bool = True) -> StructureCertificate:
    """First applicable certificate in the fixed branch order; always validated."""
    if g.n <= 2:
        return StructureCertificate(CHORDAL_LEAF, EliminationOrder(tuple(range(g.n))), "at_most_two_vertices")
    if len(components_mask(g)) != 1:
        raise GraphError("classify requires a connected graph")
    if check_free:
        ok, w = is_p6c4_free(g)
        if not ok:
            raise NotInClass(w)
    cert = _classify(g)
    ok, why = validate_certificate(g, cert)
    if not ok:
        raise StructureFailure(f"{cert.provenance} certificate fails validation: {why}",
                               {"violation": why.to_json(), "notes": _jsonable(cert.notes, g)})
    return cert


def _classify(g: Graph) -> StructureCertificate:
    cut = find_clique_cutset_mask(g)
    if cut is not None:
        k, a, b = cut
        payload = CutsetPayload(frozenset(iter_bits(k)), frozenset(iter_bits(a)), frozenset(iter_bits(b)))
        return StructureCertificate(CLIQUE_CUTSET, payload, "clique_cutset")
    uni = universal_mask(g)
    if uni:
        return StructureCertificate(UNIVERSAL_VERTEX, frozenset(iter_bits(uni)), "universal_vertex")
    ch = chordality(g)
    if isinstance(ch, EliminationOrder):
        return StructureCertificate(CHORDAL_LEAF, ch, "chordal")
    w = find_special(g, "F3")
    if w is not None:
        return _f3_branch(g, w)
    w = find_special(g, "F1")
    if w is not None:
        return _band_branch(g, w)
    w = find_induced_cycle(g, 6)
    if w is not None:
        return _c6_branch(g, w.vertices)
    w = find_special(g, "F2")
    if w is not None:
        return _f2_branch(g, w)
    return _final_branch(g)


__all__ = [
    "BandParts", "BeltParts", "BoilerParts", "BoilerRefinement", "C5Partition", "C6Partition", "CutsetPayload",
    "NotInClass", "StructureCertificate", "StructureFailure", "certificate_from_json", "check_band",
    "check_belt", "check_boiler", "check_c5_partition", "check_c6_partition", "check_certificate", "classify",
    "match_blowup", "partition_around_c5", "partition_around_c6", "validate_certificate",
]
