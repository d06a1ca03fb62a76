import itertools

import networkx as nx
from hypothesis import assume, given

from p6c4 import detect, named
from p6c4.blowup import blowup_graph
from p6c4.graph import build_graph, induced_subgraph, to_mask

from helpers import brute_has_cycle, brute_has_path, brute_induced, graphs, random_graph, to_nx


def _is_induced_copy(g, verts, pattern):
    return nx.is_isomorphic(to_nx(induced_subgraph(g, verts)[0]), to_nx(pattern))


def test_path_examples():
    w = detect.find_induced_path(named.path(6), 6)
    assert w.vertices in ((0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0))
    assert detect.find_induced_path(named.c6(), 6) is None
    # exhaustive search finds no induced P6 in Petersen; it does have induced P5
    assert detect.find_induced_path(named.petersen(), 6) is None
    assert not brute_has_path(named.petersen(), 6)
    w = detect.find_induced_path(named.petersen(), 5)
    assert w is not None and _is_induced_copy(named.petersen(), w.vertices, named.path(5))


def test_cycle_examples():
    k23 = build_graph(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])
    assert detect.find_induced_cycle(k23, 4) is not None
    tree = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert detect.find_induced_cycle(tree, 4) is None
    assert sorted(detect.find_induced_cycle(named.c5(), 5).vertices) == [0, 1, 2, 3, 4]


def test_special_examples():
    f3 = named.f3()
    assert sorted(detect.find_special(f3, "F3").vertices) == list(range(f3.n))
    assert detect.find_special(named.c5(), "F1") is None
    assert detect.find_special(named.f2(), "F1") is None
    assert brute_induced(named.f2(), named.f1()) == []


def test_p6c4_examples():
    ok, w = detect.is_p6c4_free(named.cycle(4))
    assert not ok and w.kind == "C4"
    assert detect.is_p6c4_free(named.tight(2))[0]
    split = build_graph(7, [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(4, 0), (4, 1), (5, 2), (6, 0)])
    assert detect.is_p6c4_free(split)[0]


def test_chordality_examples():
    tree = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    order = detect.chordality(tree)
    assert isinstance(order, detect.EliminationOrder)
    assert detect.is_peo(tree, list(order.order))[0]
    w = detect.chordality(named.c5())
    assert w.kind == "HOLE" and len(w.vertices) == 5
    g = blowup_graph(named.dart(), [2, 1, 3, 1, 2])[0]
    assert isinstance(detect.chordality(g), detect.EliminationOrder)


def test_simplicial_universal_cutset_examples():
    assert detect.simplicial_vertices(named.p3()) == {0, 2}
    assert detect.simplicial_vertices(named.c5()) == frozenset()
    assert detect.simplicial_vertices(named.complete(4)) == {0, 1, 2, 3}
    assert detect.universal_vertices(named.complete(4)) == {0, 1, 2, 3}
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert detect.universal_vertices(star) == {0}
    assert detect.universal_vertices(named.c5()) == frozenset()
    cut = detect.find_clique_cutset(named.p3())
    assert cut.clique == {1}
    assert detect.find_clique_cutset(named.c5()) is None
    bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert detect.find_clique_cutset(bowtie).clique == {2}


def _brute_has_clique_cutset(g):
    h = to_nx(g)
    if not nx.is_connected(h):
        return True
    for c in nx.enumerate_all_cliques(h):
        rest = h.subgraph(set(h) - set(c))
        if rest.number_of_nodes() and not nx.is_connected(rest):
            return True
    return False


@given(graphs(min_n=1, max_n=8))
def test_clique_cutset_matches_brute_force(g):
    assume(nx.is_connected(to_nx(g)))
    found = detect.find_clique_cutset(g)
    assert (found is not None) == _brute_has_clique_cutset(g)
    if found is not None:
        assert g.is_clique(to_mask(found.clique))
        rest = to_nx(g).subgraph(set(range(g.n)) - set(found.clique))
        assert not nx.is_connected(rest)


@given(graphs(max_n=8))
def test_chordality_matches_networkx(g):
    res = detect.chordality(g)
    chordal = nx.is_chordal(to_nx(g))
    assert isinstance(res, detect.EliminationOrder) == chordal
    if not chordal:
        assert detect.verify_witness(g, res)


@given(graphs(max_n=8))
def test_simplicial_and_universal_by_definition(g):
    h = to_nx(g)
    simp = {v for v in h if all(h.has_edge(a, b) for a, b in itertools.combinations(h[v], 2))}
    assert detect.simplicial_vertices(g) == simp
    assert detect.universal_vertices(g) == {v for v in h if h.degree(v) == g.n - 1}


@given(graphs(max_n=8))
def test_maximal_cliques_match_networkx(g):
    ours = sorted(sorted(detect.iter_bits(m)) for m in detect.maximal_cliques(g)) if g.n else []
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert ours == theirs


def test_detectors_agree_with_subset_enumeration():
    """200 seeded graphs, n <= 10: path, cycle and special finders against exhaustive search."""
    for seed in range(200):
        n = 5 + seed % 6
        g = random_graph(n, 0.25 + 0.5 * (seed % 7) / 6, seed)
        for k in (4, 5, 6):
            w = detect.find_induced_path(g, k)
            assert (w is not None) == brute_has_path(g, k), (seed, k)
            if w is not None:
                assert _is_induced_copy(g, w.vertices, named.path(k))
            w = detect.find_induced_cycle(g, k)
            assert (w is not None) == brute_has_cycle(g, k), (seed, k)
            if w is not None:
                assert _is_induced_copy(g, w.vertices, named.cycle(k))
        for which in ("2P3", "DART") + (("F1", "F2", "F3") if seed % 4 == 0 else ()):
            w = detect.find_special(g, which)
            assert (w is not None) == bool(brute_induced(g, detect.SPECIAL[which]())), (seed, which)
