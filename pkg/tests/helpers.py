import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from p6c4.graph import build_graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def induced_nx(g, verts):
    return to_nx(g).subgraph(verts)


def brute_induced(g, pattern):
    """All vertex subsets of g inducing a copy of ``pattern`` (networkx isomorphism)."""
    target = to_nx(pattern)
    k = pattern.n
    out = []
    for s in itertools.combinations(range(g.n), k):
        sub = induced_nx(g, s)
        if sub.number_of_edges() == target.number_of_edges() and nx.is_isomorphic(sub, target):
            out.append(s)
    return out


def brute_has_path(g, k):
    for s in itertools.combinations(range(g.n), k):
        sub = induced_nx(g, s)
        if sub.number_of_edges() == k - 1 and nx.is_connected(sub) and max(d for _, d in sub.degree()) <= 2:
            return True
    return False


def brute_has_cycle(g, k):
    for s in itertools.combinations(range(g.n), k):
        sub = induced_nx(g, s)
        if sub.number_of_edges() == k and all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
            return True
    return False


def brute_p6c4_free(g):
    return not brute_has_path(g, 6) and not brute_has_cycle(g, 4)


def brute_chi(g):
    """Chromatic number by trying every assignment with k colors, k increasing."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n - 1):
            c = (0,) + col
            if all(c[u] != c[v] for u, v in edges):
                return k
    return g.n


def nx_omega(g):
    return max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)


def random_trivially_perfect(rng, max_nodes=6):
    """Random clique tree: each node is a clique, adjacent to ancestors and descendants."""
    from p6c4.trivially_perfect import Bamboo, expand_bamboos

    count = rng.randint(1, max_nodes)
    parent = [-1] + [rng.randrange(i) for i in range(1, count)]
    nodes, n = [], 0
    for _ in range(count):
        size = rng.randint(1, 2)
        nodes.append(frozenset(range(n, n + size)))
        n += size
    return expand_bamboos(n, [Bamboo(nodes, parent)])


ACCEPTANCE_LINES = []


def criterion(number, title):
    """Record one PASS/FAIL line for an acceptance test, printed in the pytest summary."""
    import functools
    import time

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                line = f"[FAIL] criterion {number}: {title} ({type(exc).__name__}: {str(exc)[:120]})"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"[PASS] criterion {number}: {title} ({time.perf_counter() - t0:.1f}s{'; ' + detail if detail else ''})"
            ACCEPTANCE_LINES.append(line)
            print(line)

        return run

    return wrap
