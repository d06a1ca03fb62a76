"""Coloring engine for (P6, C4)-free graphs within ceil(5 omega / 4) colors.

The engine recurses on induced subgraphs. Each level tries, in order:
components, universal vertices, a clique cutset, chordality, and then a
structure certificate. For a certificate it tries certificate-specific
reductions (layer A) and then a generic tool search (layer B). If both fail
and the subgraph is small enough, it colors it exactly (layer C), flags the
step, and continues.

Every reduction removes stable sets or a vertex and recurses, so the bound
holds by induction as long as the recursion never reaches layer C.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle
from .detect import chordality, find_clique_cutset_mask, find_hole, is_p6c4_free, maximal_cliques, universal_mask
from .graph import (
    Coloring,
    Graph,
    GraphError,
    Violation,
    clone_partition,
    components_mask,
    induced_subgraph,
    iter_bits,
    popcount,
    to_mask,
)
from .structure import (
    BAND,
    BLOWUP,
    NotInClass,
    StructureCertificate,
    classify,
)

LOW_DEGREE_VERTEX = "LOW_DEGREE_VERTEX"
GOOD_STABLE_SET = "GOOD_STABLE_SET"
VERY_GOOD_STABLE_SET = "VERY_GOOD_STABLE_SET"
PERFECT_REMAINDER_SET = "PERFECT_REMAINDER_SET"
T_STABLE_SETS = "T_STABLE_SETS"
TOOL_TAGS = (LOW_DEGREE_VERTEX, GOOD_STABLE_SET, VERY_GOOD_STABLE_SET, PERFECT_REMAINDER_SET, T_STABLE_SETS)

SEARCH_BUDGET = 20000
MAX_T = 9


def bound54(omega: int) -> int:
    return (5 * omega + 3) // 4


def reed_bound(delta: int, omega: int) -> int:
    return (delta + omega + 2) // 2


@dataclass(frozen=True)
class BoundReport:
    omega: int
    delta: int
    bound54: int
    reed: int
    chi_alg: int | None = None
    chi_exact: int | None = None

    def to_json(self) -> dict:
        return {"omega": self.omega, "delta": self.delta, "bound54": self.bound54, "reed": self.reed,
                "chi_alg": self.chi_alg, "chi_exact": self.chi_exact}


@dataclass(frozen=True)
class ToolStep:
    """One application of a reduction tool; ``sets`` holds the removed stable set(s)."""

    tag: str
    sets: tuple[frozenset[int], ...]
    t: int | None = None

    @property
    def removed(self) -> int:
        return to_mask(v for s in self.sets for v in s)

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag, "sets": [sorted(s) for s in self.sets]}
        if self.t is not None:
            out["t"] = self.t
        return out


def low_degree(v: int) -> ToolStep:
    return ToolStep(LOW_DEGREE_VERTEX, (frozenset((v,)),))


def good(tag: str, s: int) -> ToolStep:
    return ToolStep(tag, (frozenset(iter_bits(s)),))


def t_sets(sets: list[int]) -> ToolStep:
    return ToolStep(T_STABLE_SETS, tuple(frozenset(iter_bits(s)) for s in sets), len(sets))


# ---------------------------------------------------------------- bounds

def omega_of(g: Graph, within: int | None = None) -> int:
    cliques = maximal_cliques(g, within)
    return max((popcount(k) for k in cliques), default=0)


def bounds(g: Graph, with_exact: bool = False, chi_alg: int | None = None) -> BoundReport:
    """All bound fields; ``chi_exact`` only when requested and ``g.n`` is within the oracle cap."""
    omega = oracle.exact_clique(g).value
    delta = max((g.degree(v) for v in range(g.n)), default=0)
    exact = None
    if with_exact and g.n <= oracle.chi_cap():
        exact = oracle.exact_chromatic(g).value
    return BoundReport(omega, delta, bound54(omega), reed_bound(delta, omega), chi_alg, exact)


# ---------------------------------------------------------------- step checks

def check_step(g: Graph, step: ToolStep, omega: int | None = None) -> None:
    """Raise Violation naming the failed invariant of ``step`` on ``g``."""
    if omega is None:
        omega = omega_of(g)
    seen = 0
    for s in step.sets:
        m = to_mask(s)
        if m >> g.n:
            raise Violation("step.range", (), "vertex out of range")
        if m & seen:
            raise Violation("step.disjoint", iter_bits(m & seen), "stable sets overlap")
        if not g.is_stable(m):
            raise Violation("step.stable", iter_bits(m), "set is not stable")
        seen |= m
    rest = g.full & ~seen
    if step.tag == LOW_DEGREE_VERTEX:
        (v,) = step.sets[0]
        if g.degree(v) > bound54(omega) - 1:
            raise Violation("step.low_degree", (v,), f"degree {g.degree(v)} exceeds {bound54(omega) - 1}")
    elif step.tag in (GOOD_STABLE_SET, VERY_GOOD_STABLE_SET):
        cliques = maximal_cliques(g)
        for k in cliques:
            if k & seen:
                continue
            if step.tag == VERY_GOOD_STABLE_SET or popcount(k) == omega:
                raise Violation("step.hits", iter_bits(k), "clique missed by the stable set")
    elif step.tag == PERFECT_REMAINDER_SET:
        if omega + 1 > bound54(omega):
            raise Violation("step.perfect_bound", (), "omega + 1 exceeds the bound")
        hole = find_hole(g, rest)
        if hole is not None:
            raise Violation("step.chordal_remainder", hole.vertices, "remainder has a hole")
    elif step.tag == T_STABLE_SETS:
        t = len(step.sets)
        if t < 5 or step.t != t:
            raise Violation("step.t", (), f"need t >= 5 sets, got {t}")
        left = omega_of(g, rest)
        if left > omega - (t - 1):
            raise Violation("step.omega_drop", (), f"omega drops from {omega} to {left}, need {omega - t + 1}")
    else:
        raise Violation("step.tag", (), f"unknown tool {step.tag!r}")


def apply_tool(g: Graph, step: ToolStep, sub: Coloring, omega: int | None = None) -> Coloring:
    """Extend ``sub`` (a coloring of ``g`` minus the step's sets, in vertex order) to ``g``."""
    if omega is None:
        omega = omega_of(g)
    check_step(g, step, omega)
    rest = [v for v in range(g.n) if not step.removed >> v & 1]
    if len(sub.assignment) != len(rest):
        raise GraphError(f"sub coloring has {len(sub.assignment)} entries for {len(rest)} vertices")
    col = [-1] * g.n
    for v, c in zip(rest, sub.assignment):
        col[v] = c
    used = len(set(sub.assignment))
    palette = sorted(set(sub.assignment))
    # relabel to 0..used-1 so new colors start at ``used``
    relabel = {c: i for i, c in enumerate(palette)}
    col = [relabel[c] if c >= 0 else -1 for c in col]
    if step.tag == LOW_DEGREE_VERTEX:
        (v,) = step.sets[0]
        taken = {col[u] for u in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        col[v] = c
    else:
        for i, s in enumerate(step.sets):
            for v in s:
                col[v] = used + i
    return Coloring(tuple(col))


# ---------------------------------------------------------------- tool search on the clone quotient

class _Quotient:
    def __init__(self, g: Graph):
        self.g = g
        self.classes, self.q = clone_partition(g)
        self.w = [popcount(c) for c in self.classes]
        self.cliques = maximal_cliques(self.q)
        self.weights = [sum(self.w[c] for c in iter_bits(k)) for k in self.cliques]
        self.omega = max(self.weights, default=0)

    def lift(self, cls_mask: int, use: dict[int, int] | None = None) -> int:
        """One vertex per class; ``use`` counts how many of each class are already taken."""
        out = 0
        for c in iter_bits(cls_mask):
            k = use.get(c, 0) if use is not None else 0
            members = list(iter_bits(self.classes[c]))
            if k < len(members):
                out |= 1 << members[k]
                if use is not None:
                    use[c] = k + 1
        return out


def _stable_transversal(q: Graph, targets: list[int], budget: int) -> int | None:
    """Stable set of ``q`` meeting every mask in ``targets``; depth-first on the tightest target."""
    nodes = 0

    def rec(chosen: int, blocked: int) -> int | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        best = None
        for k in targets:
            if k & chosen:
                continue
            cand = k & ~blocked
            if not cand:
                return None
            if best is None or popcount(cand) < popcount(best):
                best = cand
        if best is None:
            return chosen
        open_ = [k for k in targets if not k & chosen]
        # vertices meeting more unhit targets first
        for c in sorted(iter_bits(best), key=lambda c: -sum(k >> c & 1 for k in open_)):
            got = rec(chosen | (1 << c), blocked | q.masks[c] | (1 << c))
            if got is not None:
                return got
        return None

    return rec(0, 0)


def find_very_good_stable_set(g: Graph, budget: int = SEARCH_BUDGET) -> frozenset[int] | None:
    """Stable set meeting every maximal clique, or None."""
    if g.n == 0:
        return None
    qt = _Quotient(g)
    s = _stable_transversal(qt.q, qt.cliques, budget)
    return None if s is None else frozenset(iter_bits(qt.lift(s)))


def find_good_stable_set(g: Graph, budget: int = SEARCH_BUDGET) -> frozenset[int] | None:
    """Stable set meeting every maximum clique, or None."""
    if g.n == 0:
        return None
    qt = _Quotient(g)
    targets = [k for k, wt in zip(qt.cliques, qt.weights) if wt == qt.omega]
    s = _stable_transversal(qt.q, targets, budget)
    return None if s is None else frozenset(iter_bits(qt.lift(s)))


def find_low_degree_vertex(g: Graph, omega: int) -> int | None:
    limit = bound54(omega) - 1
    best = None
    for v in range(g.n):
        if g.degree(v) <= limit and (best is None or g.degree(v) < g.degree(best)):
            best = v
    return best


def find_perfect_remainder_set(g: Graph, budget: int = 2000) -> frozenset[int] | None:
    """Stable set whose removal leaves a chordal graph, or None."""
    nodes = 0

    def rec(chosen: int, blocked: int) -> int | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        hole = find_hole(g, g.full & ~chosen)
        if hole is None:
            return chosen
        for v in sorted(hole.vertices):
            if blocked >> v & 1:
                continue
            got = rec(chosen | (1 << v), blocked | g.masks[v] | (1 << v))
            if got is not None:
                return got
        return None

    s = rec(0, 0)
    return None if s is None else frozenset(iter_bits(s))


def _maximal_stable_sets(q: Graph, limit: int = 400) -> list[int]:
    comp_masks = [q.full & ~q.masks[v] & ~(1 << v) for v in range(q.n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if len(out) >= limit:
            return
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: popcount(p & comp_masks[u]))
        for v in iter_bits(p & ~comp_masks[pivot]):
            bit = 1 << v
            bk(r | bit, p & comp_masks[v], x & comp_masks[v])
            p &= ~bit
            x |= bit

    if q.n:
        bk(0, q.full, 0)
    out.sort(key=lambda m: (-popcount(m), tuple(iter_bits(m))))
    return out


def find_t_stable_sets(g: Graph, budget: int = SEARCH_BUDGET, max_t: int = MAX_T) -> list[int] | None:
    """t >= 5 disjoint stable sets whose removal drops omega by at least t - 1, or None."""
    if g.n == 0:
        return None
    qt = _Quotient(g)
    if qt.omega < 4:
        return None
    stables = _maximal_stable_sets(qt.q)
    for t in range(5, min(max_t, qt.omega + 1) + 1):
        target = qt.omega - (t - 1)
        picks = _t_search(qt, stables, t, target, budget)
        if picks is not None:
            use: dict[int, int] = {}
            return [qt.lift(s, use) for s in picks]
    return None


def _t_search(qt: _Quotient, stables: list[int], t: int, target: int, budget: int) -> list[int] | None:
    w = qt.w
    cliques = qt.cliques
    nodes = 0

    def deficits(cov: list[int]) -> list[int]:
        out = []
        for k, wt in zip(cliques, qt.weights):
            removed = sum(min(w[c], cov[c]) for c in iter_bits(k))
            out.append(wt - removed - target)
        return out

    def rec(chosen: list[int], cov: list[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        left = t - len(chosen)
        d = deficits(cov)
        worst = max(range(len(d)), key=lambda i: (d[i], -i)) if d else -1
        if worst < 0 or d[worst] <= 0:
            return chosen + [0] * left
        if d[worst] > left:
            return None
        k = cliques[worst]
        useful = [s for s in stables if any(cov[c] < w[c] for c in iter_bits(s & k))]
        useful.sort(key=lambda s: -sum(1 for i, kk in enumerate(cliques) if d[i] > 0 and any(
            cov[c] < w[c] for c in iter_bits(s & kk))))
        for s in useful:
            for c in iter_bits(s):
                cov[c] += 1
            got = rec(chosen + [s], cov)
            for c in iter_bits(s):
                cov[c] -= 1
            if got is not None:
                return got
        return None

    return rec([], [0] * qt.q.n)


def find_tool(g: Graph, omega: int) -> ToolStep | None:
    """Generic tool search in the order very good, good, low degree, perfect remainder, t sets."""
    s = find_very_good_stable_set(g)
    if s:
        return good(VERY_GOOD_STABLE_SET, to_mask(s))
    s = find_good_stable_set(g)
    if s:
        return good(GOOD_STABLE_SET, to_mask(s))
    v = find_low_degree_vertex(g, omega)
    if v is not None:
        return low_degree(v)
    s = find_perfect_remainder_set(g)
    if s:
        return good(PERFECT_REMAINDER_SET, to_mask(s))
    sets = find_t_stable_sets(g)
    if sets is not None:
        return t_sets(sets)
    return None


# ---------------------------------------------------------------- certificate-specific steps

# Stable-set families on base labels. A label repeated across sets refers to
# successive vertices of the same bag; missing vertices are skipped.
FAMILIES: dict[str, list[list[str]]] = {
    "H1": [["a", "b", "w3", "w6"], ["b", "c", "w1", "w4"], ["a", "c", "w2", "w5"],
           ["z", "w1", "w3", "w5"], ["z", "w2", "w4", "w6"]],
    "C5": [["v1", "v3"], ["v2", "v4"], ["v3", "v5"], ["v4", "v1"], ["v5", "v2"]],
    "F3": [["x", "v4", "v6"], ["y", "v2", "v6"], ["z", "v2", "v4"], ["x", "v5"], ["y", "v1"], ["z", "v3"],
           ["v1", "v3", "v5"]],
    "F3_special": [["v1", "v3", "v5"], ["v2", "y"], ["v2", "z"], ["v1", "y"], ["v3", "z"], ["x", "v4", "v6"]],
    "H2_c_large": [["v1", "v3", "v5"], ["v2", "v4", "v6"], ["c", "v1", "v5"], ["c", "v2", "v4"], ["v3", "v6"]],
    "H2_ab": [["v1", "v3", "v5"], ["v2", "v4", "v6"], ["v3", "v6"], ["a", "v5"], ["b", "v2"], ["c", "v1", "v4"]],
    "H2_a_empty": [["v1", "v3", "v5"], ["v2", "v4", "v6"], ["v2", "v4"], ["v3", "v6"], ["c", "v1", "v5"]],
}

FAMILIES_FOR_BASE = {
    "H1": ("H1",),
    "C5": ("C5",),
    "F3": ("F3", "F3_special"),
    "H2": ("H2_c_large", "H2_ab", "H2_a_empty"),
}


def family_sets(g: Graph, bm, family: list[list[str]]) -> list[int]:
    """Lift a label family through a blowup map."""
    use: dict[str, int] = {}
    out = []
    for labels in family:
        s = 0
        for lab in labels:
            try:
                bag = sorted(bm.bag(lab))
            except (GraphError, ValueError):
                continue
            k = use.get(lab, 0)
            if k < len(bag):
                s |= 1 << bag[k]
                use[lab] = k + 1
        out.append(s)
    return out


def _graded_cover_pair(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    """Non-adjacent u in a, v in b such that every maximal clique of g[a u b] contains u or v."""
    cliques = maximal_cliques(g, a | b)
    for u in iter_bits(a):
        for v in iter_bits(b & ~g.masks[u]):
            if all(k >> u & 1 or k >> v & 1 for k in cliques):
                return u, v
    return None


def special_steps(g: Graph, cert: StructureCertificate, omega: int) -> list[tuple[str, ToolStep]]:
    """Candidate reductions derived from the certificate, each tagged with a short reason."""
    out: list[tuple[str, ToolStep]] = []
    if cert.tag == BLOWUP:
        base = cert.payload.base_name
        for name in FAMILIES_FOR_BASE.get(base, ()):
            sets = family_sets(g, cert.payload, FAMILIES[name])
            out.append((f"family_{name}", t_sets(sets)))
    elif cert.tag == BAND:
        p = cert.payload.masks()
        for x, y, extra, why in ((p["R2"], p["R3"], p["Q5"], "band_r2r3"),
                                 (p["Q1"], p["Q2"], p["Q4"], "band_q1q2"),
                                 (p["Q4"], p["Q3"], p["Q1"], "band_q3q4")):
            if x and y and _first_missing(g, x, y):
                pair = _graded_cover_pair(g, x, y)
                if pair is not None:
                    s = (1 << pair[0]) | (1 << pair[1])
                    if extra:
                        s |= extra & -extra
                    out.append((why, good(VERY_GOOD_STABLE_SET, s)))
                break
    return out


def _first_missing(g: Graph, a: int, b: int) -> bool:
    return any(b & ~g.masks[u] for u in iter_bits(a))


# ---------------------------------------------------------------- engine

@dataclass
class TraceStep:
    depth: int
    branch: str
    vertices: list[int]
    colors_introduced: int = 0
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"depth": self.depth, "branch": self.branch, "vertices": self.vertices,
               "colors_introduced": self.colors_introduced}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ColorResult:
    coloring: Coloring
    report: BoundReport
    trace: list[TraceStep]
    fallbacks: int

    @property
    def flagged(self) -> bool:
        return self.fallbacks > 0


class _Engine:
    def __init__(self, exact_cap: int):
        self.trace: list[TraceStep] = []
        self.fallbacks = 0
        self.exact_cap = exact_cap

    def log(self, depth: int, branch: str, verts, colors: int = 0, **detail) -> None:
        self.trace.append(TraceStep(depth, branch, sorted(verts), colors, detail))

    def solve(self, g: Graph, back: list[int], depth: int) -> list[int]:
        col = self._solve(g, back, depth)
        ok, bad = oracle.verify_coloring(g, col)
        if not ok:
            raise RuntimeError(f"engine produced a monochromatic edge {bad}")
        return col

    def sub(self, g: Graph, back: list[int], mask: int, depth: int) -> tuple[list[int], list[int]]:
        h, verts = induced_subgraph(g, mask)
        col = self.solve(h, [back[v] for v in verts], depth + 1)
        return col, verts

    def _solve(self, g: Graph, back: list[int], depth: int) -> list[int]:
        n = g.n
        if n == 0:
            return []
        everyone = [back[v] for v in range(n)]
        comps = components_mask(g)
        if len(comps) > 1:
            self.log(depth, "components", everyone, detail_count=len(comps))
            col = [0] * n
            for c in comps:
                sub, verts = self.sub(g, back, c, depth)
                for v, x in zip(verts, sub):
                    col[v] = x
            return col
        if n == 1:
            self.log(depth, "single_vertex", everyone, 1)
            return [0]
        uni = universal_mask(g)
        if uni:
            rest = g.full & ~uni
            sub, verts = self.sub(g, back, rest, depth) if rest else ([], [])
            col = [0] * n
            for v, x in zip(verts, sub):
                col[v] = x
            base = max(sub, default=-1) + 1
            for i, u in enumerate(iter_bits(uni)):
                col[u] = base + i
            self.log(depth, "universal", [back[u] for u in iter_bits(uni)], popcount(uni))
            return col
        cut = find_clique_cutset_mask(g)
        if cut is not None:
            return self._cutset(g, back, depth, cut)
        ch = chordality(g)
        if hasattr(ch, "order"):
            col = [-1] * n
            for v in reversed(ch.order):
                taken = {col[u] for u in g.adj[v]}
                c = 0
                while c in taken:
                    c += 1
                col[v] = c
            self.log(depth, "chordal", everyone, max(col) + 1)
            return col
        omega = omega_of(g)
        cert = classify(g, check_free=False)
        self.log(depth, "classify", everyone, tag=cert.tag, provenance=cert.provenance)
        for why, step in special_steps(g, cert, omega):
            try:
                check_step(g, step, omega)
            except Violation:
                continue
            return self._apply(g, back, depth, step, omega, f"special:{why}")
        step = find_tool(g, omega)
        if step is not None:
            return self._apply(g, back, depth, step, omega, "tool")
        if n > self.exact_cap:
            raise RuntimeError(f"no reduction found on a {n}-vertex subgraph above the exact cap {self.exact_cap}")
        res = oracle.exact_chromatic(g)
        self.fallbacks += 1
        self.log(depth, "exact_fallback", everyone, res.value, flagged=True, tag=cert.tag)
        if res.value > bound54(omega):
            raise RuntimeError(f"exact chromatic number {res.value} exceeds the bound {bound54(omega)}")
        return list(res.witness)

    def _apply(self, g: Graph, back: list[int], depth: int, step: ToolStep, omega: int, layer: str) -> list[int]:
        rest = g.full & ~step.removed
        if rest:
            sub, _ = self.sub(g, back, rest, depth)
        else:
            sub = []
        col = apply_tool(g, step, Coloring(tuple(sub)), omega).assignment
        new = max(col) + 1 - (max(sub) + 1 if sub else 0)
        self.log(depth, layer, [back[v] for v in iter_bits(step.removed)], max(new, 0), tool=step.tag,
                 sets=[sorted(back[v] for v in s) for s in step.sets])
        return list(col)

    def _cutset(self, g: Graph, back: list[int], depth: int, cut: tuple[int, int, int]) -> list[int]:
        k, a, b = cut
        col_a, verts_a = self.sub(g, back, a | k, depth)
        col_b, verts_b = self.sub(g, back, b | k, depth)
        side_a = dict(zip(verts_a, col_a))
        side_b = dict(zip(verts_b, col_b))
        merged = merge_on_clique([side_a, side_b], k)
        self.log(depth, "clique_cutset", [back[v] for v in iter_bits(k)], 0,
                 side_a=sorted(back[v] for v in iter_bits(a)), side_b=sorted(back[v] for v in iter_bits(b)))
        return [merged[v] for v in range(g.n)]


def merge_on_clique(sides: list[dict[int, int]], clique: int) -> dict[int, int]:
    """Merge side colorings that overlap exactly on ``clique`` by permuting the later sides' colors."""
    out = dict(sides[0])
    for side in sides[1:]:
        perm: dict[int, int] = {}
        for v in iter_bits(clique):
            perm[side[v]] = out[v]
        taken = set(perm.values())
        nxt = 0
        for c in sorted(set(side.values())):
            if c in perm:
                continue
            while nxt in taken:
                nxt += 1
            perm[c] = nxt
            taken.add(nxt)
        for v, c in side.items():
            out[v] = perm[c]
    return out


def color(g: Graph, with_exact: bool = False, exact_cap: int | None = None) -> ColorResult:
    """Color a (P6, C4)-free graph within ceil(5 omega / 4) colors with a derivation trace."""
    ok, w = is_p6c4_free(g)
    if not ok:
        raise NotInClass(w)
    cap = oracle.chi_cap() if exact_cap is None else exact_cap
    eng = _Engine(cap)
    col = eng.solve(g, list(range(g.n)), 0)
    coloring = Coloring(tuple(col)).normalized()
    report = bounds(g, with_exact=with_exact, chi_alg=coloring.num_colors)
    if report.chi_alg > report.bound54:
        raise RuntimeError(f"engine used {report.chi_alg} colors, above the bound {report.bound54}")
    return ColorResult(coloring, report, eng.trace, eng.fallbacks)


def color_special(g: Graph, cert: StructureCertificate) -> Coloring:
    """Color ``g`` starting from a given certificate; recursion below it uses the full engine."""
    from .structure import validate_certificate

    ok, why = validate_certificate(g, cert)
    if not ok:
        raise GraphError(f"certificate does not validate: {why}")
    omega = omega_of(g)
    eng = _Engine(oracle.chi_cap())
    for _, step in special_steps(g, cert, omega):
        try:
            check_step(g, step, omega)
        except Violation:
            continue
        return Coloring(tuple(eng._apply(g, list(range(g.n)), 0, step, omega, "special"))).normalized()
    return Coloring(tuple(eng.solve(g, list(range(g.n)), 0))).normalized()


__all__ = [
    "BoundReport", "ColorResult", "ToolStep", "TraceStep", "apply_tool", "bound54", "bounds", "check_step",
    "color", "color_special", "find_good_stable_set", "find_low_degree_vertex", "find_perfect_remainder_set",
    "find_t_stable_sets", "find_tool", "find_very_good_stable_set", "merge_on_clique", "reed_bound",
]
