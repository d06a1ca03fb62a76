"""Exact references: clique number, chromatic number, coloring verification.

These are the ground truth for the tests, so they share nothing with the
coloring engine beyond the graph representation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .graph import Coloring, Graph, GraphError, iter_bits

DEFAULT_CHI_CAP = 30
DEFAULT_OMEGA_CAP = 60
CAP_ENV = "P6C4_EXACT_CAP"


def chi_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CHI_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int


def _greedy_color_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Sequential greedy coloring of ``cand``; returns (vertex, color) by color."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v) & ~g.masks[v]
            rest &= ~(1 << v)
            out.append((v, color))
    return out


def exact_clique(g: Graph) -> OracleResult:
    """Maximum clique by branch and bound with greedy coloring bounds."""
    best: list[int] = []
    nodes = 0

    def expand(current: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        order = _greedy_color_bound(g, cand)
        for v, col in reversed(order):
            if len(current) + col <= len(best):
                return
            current.append(v)
            nxt = cand & g.masks[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], g.full)
    return OracleResult(len(best), tuple(sorted(best)), nodes)


def clique_number(g: Graph) -> int:
    return exact_clique(g).value


def _clone_class_index(g: Graph) -> list[int]:
    ids: dict[int, int] = {}
    return [ids.setdefault(g.masks[v] | (1 << v), len(ids)) for v in range(g.n)]


def exact_chromatic(g: Graph, upper: Coloring | None = None) -> OracleResult:
    """Chromatic number by DSATUR branch and bound.

    Colors are introduced in order (a new color is always max+1), and the
    members of a closed-twin class are colored consecutively with strictly
    increasing colors. Both reductions preserve optimality.
    """
    n = g.n
    if n == 0:
        return OracleResult(0, (), 0)
    clique = exact_clique(g)
    lower = clique.value
    cls = _clone_class_index(g)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(cls[v], []).append(v)

    best_assign = _dsatur_greedy(g)
    best = max(best_assign) + 1
    if upper is not None and upper.num_colors < best:
        best_assign = list(upper.normalized().assignment)
        best = max(best_assign) + 1
    nodes = 0
    color = [-1] * n
    # forbidden[v] = bitmask of colors on neighbours
    forbidden = [0] * n
    # seed the clique with distinct colors; this is a color-symmetry break
    seed = list(clique.witness)

    def assign(v: int, c: int) -> list[int]:
        color[v] = c
        touched = []
        bit = 1 << c
        for u in g.adj[v]:
            if color[u] < 0 and not forbidden[u] & bit:
                forbidden[u] |= bit
                touched.append(u)
        return touched

    def unassign(v: int, touched: list[int], c: int) -> None:
        color[v] = -1
        bit = ~(1 << c)
        for u in touched:
            forbidden[u] &= bit

    def pick() -> int:
        bestv, bests, bestd = -1, -1, -1
        for v in range(n):
            if color[v] < 0:
                s = forbidden[v].bit_count()
                if s > bests or (s == bests and len(g.adj[v]) > bestd):
                    bestv, bests, bestd = v, s, len(g.adj[v])
        return bestv

    def search(assigned: int, used: int, pending: list[int], floor: int) -> bool:
        nonlocal best, best_assign, nodes
        nodes += 1
        if assigned == n:
            if used < best:
                best = used
                best_assign = list(color)
            return best <= lower
        if pending:
            v, rest = pending[0], pending[1:]
        else:
            v = pick()
            rest = [u for u in members[cls[v]] if u != v and color[u] < 0]
            floor = -1
        top = min(used, best - 2)
        for c in range(floor + 1, top + 2):
            if forbidden[v] >> c & 1:
                continue
            touched = assign(v, c)
            if search(assigned + 1, max(used, c + 1), rest, c if rest else -1):
                return True
            unassign(v, touched, c)
        return False

    # place the seed clique, keeping clone classes contiguous
    placed = 0
    for i, v in enumerate(seed):
        assign(v, i)
        placed += 1
    if lower < best:
        # the seeded clique may split a clone class; the class members outside
        # the clique are free, which only enlarges the search space
        search(placed, lower, [], -1)
    return OracleResult(best, tuple(best_assign), nodes)


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    color = [-1] * n
    forb = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (forb[u].bit_count(), len(g.adj[u]), -u))
        c = 0
        while forb[v] >> c & 1:
            c += 1
        color[v] = c
        for u in g.adj[v]:
            forb[u] |= 1 << c
    return color


def chromatic_number(g: Graph) -> int:
    return exact_chromatic(g).value


def verify_coloring(g: Graph, c: Coloring | Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` if proper, else ``(False, edge)`` for the first bad edge."""
    assignment = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(assignment) != g.n:
        raise GraphError(f"coloring covers {len(assignment)} of {g.n} vertices")
    if any(x is None or x < 0 for x in assignment):
        raise GraphError("coloring is partial")
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            return False, (u, v)
    return True, None


def is_k_colorable_plain(g: Graph, k: int) -> bool:
    """Plain backtracking in vertex order; the second, independent oracle."""
    color = [-1] * g.n

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(color[u] != c for u in g.adj[v]):
                color[v] = c
                if go(v + 1):
                    return True
        color[v] = -1
        return False

    return go(0)


def chromatic_number_plain(g: Graph) -> int:
    k = 0
    while not is_k_colorable_plain(g, k):
        k += 1
    return k


def clique_number_plain(g: Graph) -> int:
    """Exhaustive clique number over all subsets; for tiny graphs only."""
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size > best and g.is_clique(mask):
            best = size
    return best


def max_stable_size(g: Graph) -> int:
    from .graph import complement

    return exact_clique(complement(g)).value


__all__ = [
    "OracleResult",
    "exact_clique",
    "exact_chromatic",
    "verify_coloring",
    "chromatic_number",
    "clique_number",
    "chromatic_number_plain",
    "clique_number_plain",
    "is_k_colorable_plain",
    "chi_cap",
    "iter_bits",
]
