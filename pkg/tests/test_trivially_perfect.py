import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from p6c4 import named
from p6c4.blowup import blowup_graph
from p6c4.detect import universal_vertices
from p6c4.graph import Violation, build_graph
from p6c4.trivially_perfect import (BLOWUP_DART, BLOWUP_P3, OTHER, basic_skeleton, build_bamboo,
                                    check_cpair_axioms, classify_bamboo_simplicial, clone_quotient,
                                    decompose_cpair, expand_bamboos, graded_labeling, is_graded)

from helpers import brute_has_cycle, brute_has_path, brute_induced, graphs, random_trivially_perfect


def test_clone_quotient_examples():
    cq = clone_quotient(named.complete(4))
    assert [len(c) for c in cq.classes] == [4] and cq.quotient.n == 1
    assert [len(c) for c in clone_quotient(named.c5()).classes] == [1] * 5
    pet2 = blowup_graph(named.petersen(), [2] * 10)[0]
    cq = clone_quotient(pet2)
    assert [len(c) for c in cq.classes] == [2] * 10 and cq.quotient.m == 15


@given(graphs(max_n=8))
def test_clone_classes_are_closed_twins(g):
    cq = clone_quotient(g)
    for c in cq.classes:
        closed = {g.closed(v) for v in c}
        assert len(closed) == 1
    reps = [min(c) for c in cq.classes]
    assert len({g.closed(v) for v in reps}) == len(reps)


def test_graded_labeling_examples():
    # a1 = 0, a2 = 1, b = 2
    g = build_graph(3, [(0, 1), (0, 2)])
    lab = graded_labeling(g, {0, 1}, {2})
    assert lab.order_a == (0, 1) and lab.crossing == (1, 2)
    k = named.complete(4)
    assert graded_labeling(k, {0, 1}, {2, 3}).crossing is None
    sq = build_graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    with pytest.raises(Violation) as exc:
        graded_labeling(sq, {0, 1}, {2, 3})
    assert exc.value.axiom == "graded.nested"
    assert is_graded(sq, 0b0011, 0b1100) is not None


def test_build_bamboo_examples():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    (tree,) = build_bamboo(star)
    assert tree.nodes[0] == {0} and sorted(map(sorted, (tree.nodes[i] for i in tree.children(0)))) == [[1], [2], [3]]
    with pytest.raises(Violation) as exc:
        build_bamboo(named.path(4))
    assert exc.value.axiom == "trivially_perfect.P4"


def test_bamboo_root_is_universal_set():
    rng = random.Random(7)
    for _ in range(50):
        g = random_trivially_perfect(rng)
        (tree,) = build_bamboo(g)
        assert tree.nodes[0] == universal_vertices(g)


def test_classify_bamboo_simplicial_examples():
    assert classify_bamboo_simplicial(named.p3())[0] == BLOWUP_P3
    assert classify_bamboo_simplicial(named.dart())[0] == BLOWUP_DART
    # universal vertex over a triangle-with-pendant and four isolated leaves: four independent simplicials
    g = build_graph(6, [(0, i) for i in range(1, 6)] + [(1, 2)])
    assert classify_bamboo_simplicial(g)[0] == OTHER


def test_bamboo_round_trip():
    """Every sampled (P4, C4, 2P3)-free graph is rebuilt exactly from its clique tree."""
    rng = random.Random(11)
    checked = 0
    while checked < 150:
        g = random_trivially_perfect(rng)
        if brute_induced(g, named.two_p3()):
            continue
        assert not brute_has_path(g, 4) and not brute_has_cycle(g, 4)
        trees = build_bamboo(g)
        assert all(t.is_bamboo() for t in trees)
        assert expand_bamboos(g.n, trees) == g
        checked += 1


@given(st.integers(0, 10**6))
def test_trivially_perfect_round_trip_property(seed):
    g = random_trivially_perfect(random.Random(seed), max_nodes=8)
    assert expand_bamboos(g.n, build_bamboo(g)) == g


def test_cpair_examples():
    # x = 0, a0 = 1, a1 = 2
    g = build_graph(3, [(1, 2), (0, 2)])
    dec = decompose_cpair(g, {0}, {1, 2})
    assert dec.matching == [] and dec.nodes == [frozenset({0})]
    # two adjacent clones x1 = 0, x2 = 1 seeing a1 = 3; a0 = 2
    g = build_graph(4, [(0, 1), (2, 3), (0, 3), (1, 3)])
    dec = decompose_cpair(g, {0, 1}, {2, 3})
    assert dec.nodes == [frozenset({0, 1})] and dec.matching == []
    assert basic_skeleton(g, dec).n == 3


def test_cpair_axiom_violations():
    g = build_graph(4, [(2, 3), (0, 3), (1, 3)])  # x1, x2 non-adjacent and share a1
    with pytest.raises(Violation) as exc:
        check_cpair_axioms(g, 0b0011, 0b1100)
    assert exc.value.axiom == "cpair.no_common_A_neighbor"
    g = build_graph(3, [(1, 2)])
    with pytest.raises(Violation) as exc:
        check_cpair_axioms(g, 0b001, 0b110)
    assert exc.value.axiom == "cpair.X_has_A_neighbor"


def _random_cpair(rng):
    """Clique tree X with private A-attachments; accepted only if the axioms hold."""
    x = random_trivially_perfect(rng, max_nodes=5)
    k = rng.randint(1, 4)
    n = x.n + k
    a = list(range(x.n, n))
    edges = list(x.edges()) + [(p, q) for i, p in enumerate(a) for q in a[i + 1:]]
    for v in range(x.n):
        edges += [(v, t) for t in a if rng.random() < 0.4]
    return build_graph(n, edges), set(range(x.n)), set(a)


def test_cpair_decomposition_reproduces_adjacency():
    rng = random.Random(5)
    done = 0
    for _ in range(3000):
        g, x, a = _random_cpair(rng)
        try:
            check_cpair_axioms(g, sum(1 << v for v in x), sum(1 << v for v in a))
        except Violation:
            continue
        dec = decompose_cpair(g, x, a)
        assert sorted(v for node in dec.nodes for v in node) == sorted(x)
        assert set().union(dec.slack, *dec.private) == a
        sk = basic_skeleton(g, dec)
        # skeleton adjacency between nodes mirrors the clique tree of G[X]
        for i, ni in enumerate(dec.nodes):
            for j, nj in enumerate(dec.nodes):
                if i < j:
                    assert sk.has_edge(i, j) == g.has_edge(min(ni), min(nj))
        done += 1
        if done == 60:
            break
    assert done == 60
