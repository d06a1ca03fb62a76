import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p6c4 import coloring as col
from p6c4 import generators as gen
from p6c4 import named, oracle
from p6c4.blowup import blowup_graph
from p6c4.graph import Coloring, Violation, build_graph, induced_subgraph, to_mask
from p6c4.structure import classify

from helpers import to_nx


def _maximum_cliques(g):
    cliques = list(nx.find_cliques(to_nx(g)))
    w = max(len(c) for c in cliques)
    return cliques, [c for c in cliques if len(c) == w]


def _is_good(g, s, very=False):
    allc, maxc = _maximum_cliques(g)
    return all(set(c) & set(s) for c in (allc if very else maxc)) and g.is_stable(to_mask(s))


def test_bound_formulas():
    assert [col.bound54(w) for w in range(1, 9)] == [2, 3, 4, 5, 7, 8, 9, 10]
    assert all(w + 1 <= col.bound54(w) for w in range(1, 200))
    assert col.reed_bound(5, 4) == 5 and col.reed_bound(3, 4) == 4


def test_bounds_examples():
    r = col.bounds(named.tight(2))
    assert (r.omega, r.delta, r.bound54, r.reed) == (4, 5, 5, 5)
    r = col.bounds(named.complete(4), with_exact=True)
    assert (r.omega, r.bound54, r.reed, r.chi_exact) == (4, 5, 4, 4)
    r = col.bounds(named.petersen(), with_exact=True)
    assert (r.omega, r.delta, r.bound54, r.reed, r.chi_exact) == (2, 3, 3, 3, 3)


def test_very_good_stable_set_examples():
    assert col.find_very_good_stable_set(named.p3()) == {1}
    s = col.find_very_good_stable_set(named.cycle(4))
    assert s in ({0, 2}, {1, 3})
    assert col.find_very_good_stable_set(named.c5()) is None


def test_good_stable_set_examples():
    assert col.find_good_stable_set(named.c5()) is None
    k4p = build_graph(5, [(a, b) for a in range(4) for b in range(a + 1, 4)] + [(3, 4)])
    s = col.find_good_stable_set(k4p)
    assert s is not None and _is_good(k4p, s)


def test_unbalanced_petersen_blowup_has_the_named_good_set():
    h1 = named.petersen()
    sizes = {lab: 1 for lab in h1.labels}
    sizes.update(z=3, w1=3, w4=3)
    g, bm = blowup_graph(h1, [sizes[h1.label(i)] for i in range(h1.n)], "H1")
    pick = [min(bm.bag(lab)) for lab in ("z", "w1", "w4")]
    assert _is_good(g, pick)
    found = col.find_good_stable_set(g)
    assert found is not None and _is_good(g, found)


def test_apply_tool_examples():
    c5 = named.c5()
    sub = Coloring((0, 1, 0, 1))  # P4 on v2..v5
    out = col.apply_tool(c5, col.low_degree(0), sub)
    assert oracle.verify_coloring(c5, out)[0] and out.num_colors == 3 == col.bound54(2)
    k4p = build_graph(5, [(a, b) for a in range(4) for b in range(a + 1, 4)] + [(3, 4)])
    step = col.good(col.GOOD_STABLE_SET, 1 << 0)
    rest = induced_subgraph(k4p, [1, 2, 3, 4])[0]
    out = col.apply_tool(k4p, step, Coloring(tuple(oracle.exact_chromatic(rest).witness)))
    assert oracle.verify_coloring(k4p, out)[0] and out.num_colors == 4


def test_check_step_names_failures():
    c5 = named.c5()
    with pytest.raises(Violation) as exc:
        col.check_step(c5, col.good(col.GOOD_STABLE_SET, 0b00011))
    assert exc.value.axiom == "step.stable"
    with pytest.raises(Violation) as exc:
        col.check_step(c5, col.good(col.VERY_GOOD_STABLE_SET, 0b00101))
    assert exc.value.axiom == "step.hits"
    k6 = named.complete(6)  # degree 5 is within bound54(6) - 1 = 7, so attach more
    dense = build_graph(9, k6.edges() + [(0, 6), (0, 7), (0, 8)])
    with pytest.raises(Violation) as exc:
        col.check_step(dense, col.low_degree(0))
    assert exc.value.axiom == "step.low_degree"
    with pytest.raises(Violation) as exc:
        col.check_step(c5, col.t_sets([1, 2, 4, 8, 16]))
    assert exc.value.axiom == "step.omega_drop"


def test_perfect_remainder_on_generated_instances():
    """Removing the set leaves a chordal graph, so omega(G - S) + 1 colors suffice."""
    hits = 0
    for seed in range(40):
        g, _ = gen.generate(gen.GenSpec(gen.BLOWUP, seed, {"base": "C5", "min": 1, "max": 3}))
        s = col.find_perfect_remainder_set(g)
        if s is None:
            continue
        rest = [v for v in range(g.n) if v not in s]
        sub = induced_subgraph(g, rest)[0]
        assert nx.is_chordal(to_nx(sub))
        out = col.apply_tool(g, col.good(col.PERFECT_REMAINDER_SET, to_mask(s)),
                             Coloring(tuple(oracle.exact_chromatic(sub).witness)))
        assert oracle.verify_coloring(g, out)[0]
        assert out.num_colors <= oracle.exact_clique(sub).value + 1 <= col.bound54(oracle.exact_clique(g).value)
        hits += 1
    assert hits >= 10


def test_color_examples():
    r = col.color(named.c5())
    assert r.report.chi_alg == 3 == r.report.bound54
    r = col.color(named.tight(3), with_exact=True)
    assert r.report.chi_alg == 8 == r.report.bound54 == r.report.chi_exact
    split = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    r = col.color(split)
    assert r.report.chi_alg == r.report.omega == 3


def test_color_special_examples():
    pet2 = blowup_graph(named.petersen(), [2] * 10, "H1")[0]
    c = col.color_special(pet2, classify(pet2))
    assert oracle.verify_coloring(pet2, c)[0] and c.num_colors == 5
    for q in (1, 2, 3, 4):
        g = named.tight(q)
        c = col.color_special(g, classify(g))
        assert oracle.verify_coloring(g, c)[0] and c.num_colors == (5 * q + 1) // 2
    g, parts = gen.gen_band(0, {"Q1": 2, "Q2": 2, "Q3": 2, "Q4": 2, "Q5": 2, "R2": 0, "R3": 0})
    c = col.color_special(g, classify(g))
    assert oracle.verify_coloring(g, c)[0] and c.num_colors <= col.bound54(oracle.exact_clique(g).value)


def test_color_rejects_non_members():
    from p6c4.structure import NotInClass

    with pytest.raises(NotInClass):
        col.color(named.path(6))


def test_trace_records_branches():
    r = col.color(blowup_graph(named.f3(), [2] * 9, "F3")[0])
    assert r.trace and all(step.to_json()["branch"] for step in r.trace)
    assert r.fallbacks == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 9))
def test_color_within_bound_on_random_members(seed, n):
    g = gen.gen_random_p6c4free(n, seed)
    r = col.color(g, with_exact=True)
    assert oracle.verify_coloring(g, r.coloring)[0]
    assert r.report.chi_exact <= r.report.chi_alg <= r.report.bound54


def test_engine_on_generator_families_without_fallback():
    rng = random.Random(1)
    for family in (gen.BAND, gen.BELT, gen.BOILER, gen.GLUED):
        for _ in range(6):
            g, _ = gen.generate(gen.GenSpec(family, rng.randrange(10**6)))
            if not nx.is_connected(to_nx(g)):
                continue
            r = col.color(g)
            assert r.fallbacks == 0 and r.report.chi_alg <= r.report.bound54
