import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from p6c4 import named, oracle
from p6c4.blowup import BlowupMap, blowup_graph, match_blowup, validate_blowup
from p6c4.graph import Violation

from helpers import to_nx

BASES = ("C5", "H1", "H2", "H3", "H4", "H5", "F3", "P3", "DART")


def test_petersen_matches_h1_with_unit_bags():
    bm = match_blowup(named.petersen(), "H1")
    assert bm is not None and bm.sizes() == [1] * 10


def test_two_blowup_of_petersen():
    g, _ = blowup_graph(named.petersen(), [2] * 10, "H1")
    bm = match_blowup(g, "H1")
    assert bm.sizes() == [2] * 10
    assert g.n == 20 and oracle.exact_clique(g).value == 4


def test_c5_is_h1_blowup_with_empty_bags():
    bm = match_blowup(named.c5(), "H1")
    assert bm is not None and sorted(bm.sizes()) == [0] * 5 + [1] * 5
    validate_blowup(named.c5(), bm)


def test_unit_blowup_is_isomorphic_copy():
    for name in BASES:
        base = named.base_graph(name)
        g, _ = blowup_graph(base, [1] * base.n, name)
        assert nx.is_isomorphic(to_nx(g), to_nx(base))


def test_validate_blowup_names_clause():
    g, bm = blowup_graph(named.c5(), [2] * 5, "C5")
    moved = list(bm.bags)
    v = min(moved[0])
    moved[0] = moved[0] - {v}
    moved[1] = moved[1] | {v}
    with pytest.raises(Violation) as exc:
        validate_blowup(g, BlowupMap("C5", bm.base, tuple(moved)))
    assert exc.value.axiom.startswith("blowup.")


def test_omega_of_blowup_is_heaviest_base_clique():
    rng = random.Random(3)
    for _ in range(60):
        name = rng.choice(BASES)
        base = named.base_graph(name)
        sizes = [rng.randint(0, 3) for _ in range(base.n)]
        g, _ = blowup_graph(base, sizes, name)
        heaviest = max((sum(sizes[v] for v in c) for c in nx.find_cliques(to_nx(base))), default=0)
        assert oracle.exact_clique(g).value == heaviest


@given(st.sampled_from(BASES), st.data())
def test_gen_then_match_recovers_a_valid_map(name, data):
    base = named.base_graph(name)
    sizes = data.draw(st.lists(st.integers(0, 3), min_size=base.n, max_size=base.n))
    g, _ = blowup_graph(base, sizes, name)
    bm = match_blowup(g, name)
    assert bm is not None
    validate_blowup(g, bm)
