"""Seeded constructors for every structured family and for random (P6, C4)-free graphs.

Each constructor builds an instance from a template, then checks it with the
matching validator and the detectors. If a check fails it resamples, up to a
retry budget. The seed fixes the output completely.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import named
from .blowup import BlowupMap, blowup_graph
from .detect import is_p6c4_free, maximal_cliques
from .graph import Graph, GraphError, Violation, build_graph, components_mask, iter_bits, to_mask
from .structure import (
    BandParts,
    BeltParts,
    BoilerParts,
    check_band,
    check_belt,
    check_boiler,
    refine_boiler,
)

RETRY_BUDGET = 1000

BLOWUP, FKL, TIGHT, BAND, BELT, BOILER, RANDOM_P6C4, GLUED = (
    "BLOWUP", "FKL", "TIGHT", "BAND", "BELT", "BOILER", "RANDOM_P6C4", "GLUED")
FAMILIES = (BLOWUP, FKL, TIGHT, BAND, BELT, BOILER, RANDOM_P6C4, GLUED)
STRUCTURED, REJECTION = "STRUCTURED", "REJECTION"


class GenerationError(GraphError):
    """Retry budget exhausted; ``last`` names the last violated clause."""

    def __init__(self, message: str, last: str | None = None):
        self.last = last
        super().__init__(message if last is None else f"{message} (last violation: {last})")


@dataclass(frozen=True)
class GenSpec:
    family: str
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")

    def to_json(self) -> dict:
        return {"family": self.family, "seed": self.seed, "params": dict(self.params)}

    @classmethod
    def from_json(cls, data: dict) -> "GenSpec":
        return cls(str(data["family"]).upper(), int(data.get("seed", 0)), dict(data.get("params", {})))


class _Builder:
    """Accumulates labelled vertices and edges."""

    def __init__(self):
        self.labels: list[str] = []
        self.edges: set[tuple[int, int]] = set()

    def add(self, prefix: str, count: int) -> list[int]:
        start = len(self.labels)
        self.labels += [f"{prefix}{i}" for i in range(count)]
        return list(range(start, start + count))

    def clique(self, vs: Sequence[int]) -> None:
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                self.edge(u, v)

    def complete(self, a: Sequence[int], b: Sequence[int]) -> None:
        for u in a:
            for v in b:
                self.edge(u, v)

    def edge(self, u: int, v: int) -> None:
        if u != v:
            self.edges.add((min(u, v), max(u, v)))

    def graph(self) -> Graph:
        return build_graph(len(self.labels), sorted(self.edges), self.labels)


def _graded(rng: random.Random, b: _Builder, a: Sequence[int], target: Sequence[int],
            min_len: int = 0, full_one: bool = False) -> None:
    """Join each vertex of ``a`` to a prefix of ``target``; prefixes are nested by construction."""
    if not a or not target:
        return
    lengths = [rng.randint(min_len, len(target)) for _ in a]
    if full_one:
        lengths[rng.randrange(len(a))] = len(target)
    for u, k in zip(a, lengths):
        b.complete([u], target[:k])


def _size(rng: random.Random, params: dict, key: str, lo: int, hi: int) -> int:
    v = params.get(key)
    return rng.randint(lo, hi) if v is None else int(v)


# ---------------------------------------------------------------- blowups

def gen_blowup(base: Graph | str, sizes: Sequence[int], base_name: str | None = None) -> tuple[Graph, BlowupMap]:
    if isinstance(base, str):
        base_name = base_name or base
        base = named.base_graph(base)
    if any(s < 0 for s in sizes):
        raise GraphError("bag sizes must be non-negative")
    return blowup_graph(base, sizes, base_name or "custom")


def gen_fkl(k: int, l: int, sizes: Sequence[int] | None = None) -> tuple[Graph, BlowupMap]:
    base = named.fkl(k, l)
    return blowup_graph(base, list(sizes) if sizes is not None else [1] * base.n, named.fkl_name(k, l))


def tight(q: int) -> tuple[Graph, BlowupMap]:
    if q < 1:
        raise GraphError("q must be at least 1")
    return blowup_graph(named.c5(), [q] * 5, "C5")


def random_sizes(rng: random.Random, n: int, lo: int = 0, hi: int = 3) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(n)]


# ---------------------------------------------------------------- bands

def band_template(rng: random.Random, params: dict | None = None) -> tuple[Graph, dict[str, int]]:
    params = params or {}
    b = _Builder()
    parts = {}
    for name in ("Q1", "Q2", "Q3", "Q4", "Q5"):
        parts[name] = b.add(name.lower() + "_", _size(rng, params, name, 1, 3))
    for name in ("R2", "R3"):
        parts[name] = b.add(name.lower() + "_", _size(rng, params, name, 0, 3))
    for vs in parts.values():
        b.clique(vs)
    b.complete(parts["Q5"], parts["Q1"] + parts["Q4"])
    b.complete(parts["R2"], parts["Q1"] + parts["Q2"] + parts["Q3"])
    b.complete(parts["R3"], parts["Q2"] + parts["Q3"] + parts["Q4"])
    b.complete(parts["Q2"], parts["Q3"])
    for x, y in (("Q1", "Q2"), ("Q4", "Q3"), ("R2", "R3")):
        _graded(rng, b, parts[x], parts[y])
    g = b.graph()
    return g, {k: to_mask(v) for k, v in parts.items()}


def gen_band(seed: int, params: dict | None = None, plant: str | None = None) -> tuple[Graph, BandParts]:
    """Random band. ``plant`` (test hook) breaks one clause: 'cliques', 'complete', 'empty' or 'graded'."""
    rng = random.Random(seed)
    last = None
    for _ in range(RETRY_BUDGET):
        g, parts = band_template(rng, params)
        if plant is not None:
            g = _plant_band(g, parts, plant)
            return g, BandParts.from_masks(parts)
        try:
            check_band(g, parts)
        except Violation as v:
            last = v.axiom
            continue
        if len(components_mask(g)) != 1:
            last = "disconnected"
            continue
        ok, w = is_p6c4_free(g)
        if not ok:
            last = f"contains {w.kind}"
            continue
        return g, BandParts.from_masks(parts)
    raise GenerationError("band retry budget exhausted", last)


def _plant_band(g: Graph, parts: dict[str, int], clause: str) -> Graph:
    edges = set(g.edges())
    first = {k: next(iter_bits(m), None) for k, m in parts.items()}
    if clause == "cliques":
        q = list(iter_bits(parts["Q1"]))
        if len(q) < 2:
            raise GraphError("planting a clique violation needs |Q1| >= 2")
        edges.discard((q[0], q[1]))
    elif clause == "complete":
        edges.discard(tuple(sorted((first["Q5"], first["Q1"]))))
    elif clause == "empty":
        edges.add(tuple(sorted((first["Q5"], first["Q2"]))))
    elif clause == "graded":
        q1 = list(iter_bits(parts["Q1"]))
        q2 = list(iter_bits(parts["Q2"]))
        if len(q1) < 2 or len(q2) < 2:
            raise GraphError("planting a graded violation needs |Q1|, |Q2| >= 2")
        for u in q1[:2]:
            for v in q2[:2]:
                edges.discard(tuple(sorted((u, v))))
        edges.add(tuple(sorted((q1[0], q2[0]))))
        edges.add(tuple(sorted((q1[1], q2[1]))))
    else:
        raise GraphError(f"unknown band clause {clause!r}")
    return build_graph(g.n, sorted(edges), g.labels)


# ---------------------------------------------------------------- belts

def _r_side(rng: random.Random, b: _Builder, name: str, params: dict) -> list[list[int]]:
    """Components of R_j: none, or at least two cliques (no vertex is universal in G[R_j])."""
    count = params.get(f"{name}_components")
    count = rng.choice((0, 2, 2, 3)) if count is None else int(count)
    if count == 1:
        raise GraphError(f"{name} needs 0 or at least 2 components")
    size = params.get("R_size")
    return [b.add(f"{name.lower()}_{c}_", rng.randint(1, 2) if size is None else int(size)) for c in range(count)]


def belt_template(rng: random.Random, params: dict | None = None) -> tuple[Graph, dict[str, int]]:
    params = params or {}
    b = _Builder()
    q1 = b.add("q1_", _size(rng, params, "Q1", 1, 2))
    q4 = b.add("q4_", _size(rng, params, "Q4", 1, 2))
    q5 = b.add("q5_", _size(rng, params, "Q5", 1, 2))
    r2 = _r_side(rng, b, "R2", params)
    r3 = _r_side(rng, b, "R3", params)
    # each R component owns private attachments on the opposite Q side
    att = params.get("att_size")
    a3 = [b.add(f"q3_att{c}_", rng.randint(1, 2) if att is None else int(att)) for c in range(len(r2))]
    a2 = [b.add(f"q2_att{c}_", rng.randint(1, 2) if att is None else int(att)) for c in range(len(r3))]
    s2 = b.add("q2_", _size(rng, params, "S2", 1, 2))
    s3 = b.add("q3_", _size(rng, params, "S3", 1, 2))
    q2 = [v for grp in a2 for v in grp] + s2
    q3 = [v for grp in a3 for v in grp] + s3
    r2_all = [v for c in r2 for v in c]
    r3_all = [v for c in r3 for v in c]
    for vs in (q1, q2, q3, q4, q5):
        b.clique(vs)
    for comp in r2 + r3:
        b.clique(comp)
    b.complete(q1, q2 + r2_all + q5)
    b.complete(q4, q3 + r3_all + q5)
    b.complete(q2, r2_all)
    b.complete(q3, r3_all)
    for comp, att in zip(r2, a3):
        _graded(rng, b, comp, att, min_len=1, full_one=True)
    for comp, att in zip(r3, a2):
        _graded(rng, b, comp, att, min_len=1, full_one=True)
    # attachments are complete to the opposite Q side; the rest is graded
    b.complete([v for grp in a3 for v in grp], q2)
    b.complete([v for grp in a2 for v in grp], q3)
    _graded(rng, b, s2, s3, min_len=1, full_one=True)
    parts = {"Q1": q1, "Q2": q2, "Q3": q3, "Q4": q4, "Q5": q5, "R2": r2_all, "R3": r3_all}
    return b.graph(), {k: to_mask(v) for k, v in parts.items()}


def minimal_belt() -> tuple[Graph, BeltParts]:
    """Smallest belt with both R sides present: Q2 and Q3 need two vertices each."""
    g, parts = belt_template(random.Random(0), {"Q1": 1, "Q4": 1, "Q5": 1, "S2": 0, "S3": 0, "R_size": 1,
                                                "att_size": 1, "R2_components": 2, "R3_components": 2})
    check_belt(g, parts)
    return g, BeltParts.from_masks(parts)


def gen_belt(seed: int, params: dict | None = None) -> tuple[Graph, BeltParts]:
    rng = random.Random(seed)
    last = None
    for _ in range(RETRY_BUDGET):
        g, parts = belt_template(rng, params)
        try:
            check_belt(g, parts)
        except Violation as v:
            last = v.axiom
            continue
        return g, BeltParts.from_masks(parts)
    raise GenerationError("belt retry budget exhausted", last)


# ---------------------------------------------------------------- boilers

def boiler_template(rng: random.Random, params: dict | None = None) -> tuple[Graph, BoilerParts]:
    params = params or {}
    k = _size(rng, params, "k", 3, 4)
    if k < 3:
        raise GraphError(f"a boiler needs k >= 3 blocks, got {k}")
    b = _Builder()
    q = b.add("q_", _size(rng, params, "Q", 1, 2))
    a = b.add("a_", _size(rng, params, "A", 1, 3))
    bb = [b.add(f"b{i + 1}_", _size(rng, params, "block_b", 1, 2)) for i in range(k)]
    mb = [b.add(f"m{i + 1}_", _size(rng, params, "block_m", 1, 2)) for i in range(k)]
    b_all = [v for blk in bb for v in blk]
    m_all = [v for blk in mb for v in blk]
    b.clique(q)
    b.clique(a)
    b.clique(b_all)
    for blk in mb:
        b.clique(blk)
    b.complete(q, a + m_all)
    for mi, bi in zip(mb, bb):
        _graded(rng, b, mi, bi, min_len=1, full_one=True)
    # A vertices are complete to a prefix of blocks, at least 2 and at most k - 1 long
    with_l = params.get("L")
    l_mode = rng.choice(("none", "clique", "p3")) if with_l is None else str(with_l)
    top = k - 1
    prefix = {}
    if l_mode == "p3":
        j = rng.randint(3, k)
        for v in a:
            prefix[v] = j - 1
    else:
        for v in a:
            prefix[v] = rng.randint(2, k - 1)
    top = max(prefix.values())
    for v in a:
        for i in range(prefix[v]):
            b.complete([v], mb[i] + bb[i])
    l_all: list[int] = []
    if l_mode != "none":
        heads = [v for v in a if prefix[v] == top]
        if l_mode == "p3":
            # the A vertices seen by L leaves are complete to every block but the last
            for v in heads:
                for i in range(prefix[v], k - 1):
                    b.complete([v], mb[i] + bb[i])
                prefix[v] = k - 1
            if len(heads) < 2:
                extra = b.add("a_top_", 2 - len(heads))
                b.clique(a + extra)
                b.complete(q, extra)
                for v in extra:
                    for i in range(k - 1):
                        b.complete([v], mb[i] + bb[i])
                    prefix[v] = k - 1
                a += extra
                heads += extra
            leaf1, center, leaf2 = b.add("l_leaf_", 1), b.add("l_center_", 1), b.add("l_leaf_", 1)
            b.complete(center, leaf1 + leaf2)
            b.complete(leaf1, heads[:1])
            b.complete(leaf2, heads[1:2])
            b.complete(center, heads[:2])
            l_all = leaf1 + center + leaf2
        else:
            l_all = b.add("l_", rng.randint(1, 2))
            b.clique(l_all)
            _graded(rng, b, l_all, heads, min_len=1, full_one=True)
        b.complete(l_all, b_all)
    g = b.graph()
    parts = {"Q": to_mask(q), "A": to_mask(a), "B": to_mask(b_all), "L": to_mask(l_all), "M": to_mask(m_all)}
    m_masks, b_masks, b_star, m_star, ref = refine_boiler(g, parts, [to_mask(x) for x in mb],
                                                          [to_mask(x) for x in bb])
    bp = BoilerParts(*(frozenset(iter_bits(parts[n])) for n in ("Q", "A", "B", "L", "M")),
                     tuple(frozenset(iter_bits(x)) for x in m_masks),
                     tuple(frozenset(iter_bits(x)) for x in b_masks), b_star, m_star, ref)
    return g, bp


def minimal_boiler() -> tuple[Graph, BoilerParts]:
    """k = 3, singleton blocks, L a single P3."""
    return gen_boiler(0, {"k": 3, "Q": 1, "A": 2, "block_b": 1, "block_m": 1, "L": "p3"})


def gen_boiler(seed: int, params: dict | None = None) -> tuple[Graph, BoilerParts]:
    params = params or {}
    if params.get("k") is not None and int(params["k"]) < 3:
        raise GraphError(f"a boiler needs k >= 3 blocks, got {params['k']}")
    rng = random.Random(seed)
    last = None
    for _ in range(RETRY_BUDGET):
        try:
            g, bp = boiler_template(rng, params)
            check_boiler(g, bp)
        except Violation as v:
            last = v.axiom
            continue
        return g, bp
    raise GenerationError("boiler retry budget exhausted", last)


# ---------------------------------------------------------------- gluing and random graphs

def glue(g: Graph, h: Graph, kg: Sequence[int], kh: Sequence[int]) -> Graph:
    """Identify clique ``kg`` of ``g`` with clique ``kh`` of ``h`` (in order)."""
    if len(kg) != len(kh):
        raise GraphError("glued cliques must have equal size")
    if not g.is_clique(to_mask(kg)) or not h.is_clique(to_mask(kh)):
        raise GraphError("gluing sets must be cliques")
    mapping = {}
    nxt = g.n
    for v in range(h.n):
        if v in kh:
            mapping[v] = kg[list(kh).index(v)]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = set(g.edges())
    for u, v in h.edges():
        a, c = mapping[u], mapping[v]
        edges.add((min(a, c), max(a, c)))
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = list(g.labels) + [f"{h.label(v)}'" for v in range(h.n) if v not in kh]
    return build_graph(nxt, sorted(edges), labels)


def _random_piece(rng: random.Random) -> Graph:
    for _ in range(RETRY_BUDGET):
        g = _random_piece_once(rng)
        if len(components_mask(g)) == 1:
            return g
    raise GenerationError("could not sample a connected piece")


def _random_piece_once(rng: random.Random) -> Graph:
    choice = rng.choice((BLOWUP, BLOWUP, FKL, BAND, BELT, BOILER))
    if choice == BLOWUP:
        name = rng.choice(("C5", "H1", "H2", "H3", "H4", "H5", "F3"))
        base = named.base_graph(name)
        return gen_blowup(base, random_sizes(rng, base.n, 0, 2), name)[0]
    if choice == FKL:
        k, l_ = rng.randint(1, 2), rng.randint(1, 2)
        return gen_fkl(k, l_, random_sizes(rng, 2 * (k + l_) + 5, 0, 2))[0]
    seed = rng.randrange(1 << 30)
    if choice == BAND:
        return gen_band(seed)[0]
    if choice == BELT:
        return gen_belt(seed)[0]
    return gen_boiler(seed)[0]


def gen_glued(seed: int, depth: int = 1) -> Graph:
    """Glue ``depth + 1`` structured pieces along cliques; resampled until (P6, C4)-free."""
    rng = random.Random(seed)
    last = None
    for _ in range(RETRY_BUDGET):
        g = _random_piece(rng)
        for _ in range(depth):
            h = _random_piece(rng)
            cg = [c for c in maximal_cliques(g)]
            ch = [c for c in maximal_cliques(h)]
            kg_mask = rng.choice(cg)
            kh_mask = rng.choice(ch)
            size = rng.randint(1, min(bin(kg_mask).count("1"), bin(kh_mask).count("1")))
            kg = list(iter_bits(kg_mask))[:size]
            kh = list(iter_bits(kh_mask))[:size]
            g = glue(g, h, kg, kh)
        ok, w = is_p6c4_free(g)
        if ok:
            return g
        last = f"contains {w.kind}"
    raise GenerationError("glue retry budget exhausted", last)


def gen_random_p6c4free(n: int, seed: int, strategy: str = REJECTION, density: float | None = None) -> Graph:
    """Random (P6, C4)-free graph on ``n`` vertices (REJECTION) or a structured sample (STRUCTURED)."""
    if n < 1:
        raise GraphError("n must be at least 1")
    rng = random.Random(seed)
    if strategy == STRUCTURED:
        g = gen_glued(rng.randrange(1 << 30), depth=rng.randint(0, 1))
        for _ in range(rng.randint(0, 1)):
            g = _add_universal(g)
        ok, w = is_p6c4_free(g)
        if not ok:
            raise GenerationError("structured sample is not (P6, C4)-free", w.kind)
        return g
    if strategy != REJECTION:
        raise GraphError(f"unknown strategy {strategy!r}")
    if n > 10:
        raise GraphError("REJECTION sampling is limited to n <= 10")
    last = None
    for _ in range(RETRY_BUDGET):
        p = rng.uniform(0.2, 0.8) if density is None else density
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        ok, w = is_p6c4_free(g)
        if ok:
            return g
        last = w.kind
    raise GenerationError("rejection budget exhausted", last)


def _add_universal(g: Graph) -> Graph:
    edges = list(g.edges()) + [(v, g.n) for v in range(g.n)]
    labels = list(g.labels) + ["u"] if g.labels is not None else None
    return build_graph(g.n + 1, edges, labels)


# ---------------------------------------------------------------- spec dispatch

def generate(spec: GenSpec) -> tuple[Graph, dict]:
    """Build the instance described by ``spec``; the dict is a JSON sidecar describing its structure."""
    p = dict(spec.params)
    rng = random.Random(spec.seed)
    side: dict = {"spec": spec.to_json()}
    if spec.family == BLOWUP:
        base_name = p.get("base", "C5")
        base = named.base_graph(base_name)
        sizes = p.get("sizes") or random_sizes(rng, base.n, int(p.get("min", 0)), int(p.get("max", 3)))
        g, bm = gen_blowup(base, sizes, base_name)
        side["blowup"] = bm.to_json(g)
    elif spec.family == FKL:
        k, l_ = int(p.get("k", 1)), int(p.get("l", 1))
        sizes = p.get("sizes")
        if sizes is None and p.get("random_sizes"):
            sizes = random_sizes(rng, 2 * (k + l_) + 5, 0, 3)
        g, bm = gen_fkl(k, l_, sizes)
        side["blowup"] = bm.to_json(g)
    elif spec.family == TIGHT:
        g, bm = tight(int(p.get("q", 2)))
        side["blowup"] = bm.to_json(g)
    elif spec.family == BAND:
        g, parts = gen_band(spec.seed, p)
        side["parts"] = {k: sorted(v) for k, v in parts.__dict__.items()}
    elif spec.family == BELT:
        g, parts = gen_belt(spec.seed, p)
        side["parts"] = {k: sorted(v) for k, v in parts.__dict__.items()}
    elif spec.family == BOILER:
        g, bp = gen_boiler(spec.seed, p)
        side["parts"] = {k: sorted(getattr(bp, k)) for k in ("Q", "A", "B", "L", "M")}
        side["M_blocks"] = [sorted(x) for x in bp.m_blocks]
        side["B_blocks"] = [sorted(x) for x in bp.b_blocks]
        side["refinement"] = bp.refinement.to_json() if bp.refinement else None
    elif spec.family == GLUED:
        g = gen_glued(spec.seed, int(p.get("depth", 1)))
    else:
        g = gen_random_p6c4free(int(p.get("n", 8)), spec.seed, str(p.get("strategy", REJECTION)).upper())
    ok, w = is_p6c4_free(g)
    if not ok:
        raise GenerationError(f"{spec.family} output is not (P6, C4)-free", w.kind)
    return g, side


__all__ = [
    "BAND", "BELT", "BLOWUP", "BOILER", "FKL", "FAMILIES", "GLUED", "GenSpec", "GenerationError", "RANDOM_P6C4",
    "REJECTION", "RETRY_BUDGET", "STRUCTURED", "TIGHT", "gen_band", "gen_belt", "gen_blowup", "gen_boiler",
    "gen_fkl", "gen_glued", "gen_random_p6c4free", "generate", "glue", "minimal_belt", "minimal_boiler", "tight",
]
