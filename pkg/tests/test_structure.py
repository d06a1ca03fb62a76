import itertools
import json

import pytest

from p6c4 import generators as gen
from p6c4 import named
from p6c4.blowup import blowup_graph
from p6c4.detect import find_special, is_p6c4_free
from p6c4.io import from_graph6
from p6c4.graph import GraphError, Violation, build_graph, iter_bits
from p6c4.structure import (BAND, BELT, BLOWUP, BOILER, CLIQUE_CUTSET, UNIVERSAL_VERTEX, BeltParts, NotInClass,
                            StructureCertificate, certificate_from_json, check_band, check_belt, check_boiler,
                            check_c5_partition, check_c6_partition, classify, partition_around_c5,
                            partition_around_c6, validate_certificate)

from helpers import to_nx


def _hole(g, k):
    return [g.index(f"v{i}") for i in range(1, k + 1)]


def _members(mask):
    return set(iter_bits(mask))


def test_c5_partition_of_f1():
    g = named.f1()
    p = partition_around_c5(g, _hole(g, 5))
    assert g.index("x") in _members(p.X[0])
    assert g.index("y") in _members(p.X[1])
    assert g.index("z") in _members(p.X[2])


def test_c5_partition_of_f2():
    g = named.f2()
    p = partition_around_c5(g, _hole(g, 5))
    assert g.index("t") in _members(p.T[4])
    assert g.index("x") in _members(p.X[0])
    assert g.index("y") in _members(p.X[2])


def test_bare_holes_have_empty_partitions():
    p = partition_around_c5(named.c5(), range(5))
    assert not any(p.sets().values())
    q = partition_around_c6(named.c6(), range(6))
    assert not any(q.sets().values())


def test_c6_partition_of_f3():
    g = named.f3()
    p = partition_around_c6(g, _hole(g, 6))
    assert g.index("x") in _members(p.A[1])
    assert g.index("y") in _members(p.A[3])
    assert g.index("z") in _members(p.A[5])
    check_c6_partition(g, p)


def test_c6_partition_of_petersen_against_traces():
    g = named.petersen()
    h = to_nx(g)
    holes = [c for c in itertools.permutations(range(10), 6)
             if c[0] == min(c) and c[1] < c[5]
             and all(h.has_edge(c[i], c[(i + 1) % 6]) for i in range(6))
             and h.subgraph(c).number_of_edges() == 6]
    assert holes
    for hole in holes:
        p = partition_around_c6(g, hole)
        assert not any(p.B) and not p.S and not any(p.A)
        for v in set(range(10)) - set(hole):
            trace = sorted(i for i, u in enumerate(hole) if h.has_edge(u, v))
            if not trace:
                assert v in _members(p.L)
                continue
            assert len(trace) == 2 and trace[1] - trace[0] == 3
            assert v in _members(p.D[trace[0]])
        assert any(p.D)


def test_bad_hole_is_rejected():
    with pytest.raises(GraphError):
        partition_around_c5(named.c6(), range(5))


def test_classify_examples():
    assert classify(named.complete(5)).tag == UNIVERSAL_VERTEX
    bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    cert = classify(bowtie)
    assert cert.tag == CLIQUE_CUTSET and cert.payload.clique == {2}
    f1 = named.f1()
    cert = classify(f1)
    assert cert.tag == BAND and validate_certificate(f1, cert)[0]
    assert find_special(f1, "F3") is None
    cert = classify(named.petersen())
    assert cert.tag == BLOWUP and cert.payload.base_name == "H1"


@pytest.mark.parametrize("code", ["K{eCJ@@EWN_~", "K}vEH?XEWN_^"])
def test_hole_case_without_a_gives_belt_with_empty_q2(code):
    # seen inside the colouring recursion on generated belts; every C5 lands in the X34^N case with A empty
    g = from_graph6(code)
    assert is_p6c4_free(g)[0]
    cert = classify(g)
    assert cert.tag == BELT and validate_certificate(g, cert)[0]
    assert not cert.payload.Q2 and not cert.payload.R3


def test_classify_rejects_non_members():
    with pytest.raises(NotInClass) as exc:
        classify(named.cycle(4))
    assert exc.value.witness.kind == "C4"
    with pytest.raises(GraphError):
        classify(named.two_p3())


def test_generated_band_validates_with_its_parts():
    for seed in range(20):
        g, parts = gen.gen_band(seed, {"Q1": 2, "Q2": 2})
        check_band(g, parts.masks())


@pytest.mark.parametrize("clause", ["cliques", "complete", "empty", "graded"])
def test_planted_band_violation_is_named(clause):
    g, parts = gen.gen_band(4, {"Q1": 2, "Q2": 2}, plant=clause)
    with pytest.raises(Violation) as exc:
        check_band(g, parts.masks())
    assert exc.value.axiom == f"band.{clause}"
    ok, why = validate_certificate(g, StructureCertificate(BAND, parts, "planted"))
    assert not ok and why.axiom == f"band.{clause}"


def test_planted_graded_violation_is_a_c4():
    g, parts = gen.gen_band(4, {"Q1": 2, "Q2": 2}, plant="graded")
    with pytest.raises(Violation) as exc:
        check_band(g, parts.masks())
    sub = to_nx(g).subgraph(exc.value.vertices)
    assert sub.number_of_edges() == 4 and all(d == 2 for _, d in sub.degree())


def test_belt_with_universal_r2_vertex_names_fourth_clause():
    g, parts = gen.minimal_belt()
    check_belt(g, parts.masks())
    m = parts.masks()
    # move a Q2 vertex into R2: it is complete to R2, hence universal there
    q = next(iter_bits(m["Q2"]))
    m["Q2"] &= ~(1 << q)
    m["R2"] |= 1 << q
    with pytest.raises(Violation) as exc:
        check_belt(g, m)
    assert exc.value.axiom.startswith("belt.fourth")


def test_minimal_generators_validate():
    g, parts = gen.minimal_belt()
    check_belt(g, parts.masks())
    assert isinstance(parts, BeltParts) and all(len(getattr(parts, q)) == 1 for q in ("Q1", "Q4", "Q5"))
    g, bp = gen.minimal_boiler()
    check_boiler(g, bp)
    assert bp.k == 3
    with pytest.raises(GraphError):
        gen.gen_boiler(0, {"k": 2})


def test_boiler_moved_vertex_fails():
    g, bp = gen.minimal_boiler()
    cert = StructureCertificate(BOILER, bp, "gen")
    assert validate_certificate(g, cert)[0]
    q = next(iter(bp.Q))
    moved = StructureCertificate(BOILER, type(bp)(bp.Q - {q}, bp.A | {q}, bp.B, bp.L, bp.M, bp.m_blocks,
                                                  bp.b_blocks, bp.b_star, bp.m_star, bp.refinement), "moved")
    ok, why = validate_certificate(g, moved)
    assert not ok and why.axiom.startswith("boiler.")


CORPUS = [named.f1(), named.f2(), named.f3(), named.petersen(), named.h2(), named.h3(), named.h4(), named.h5(),
          named.tight(2), blowup_graph(named.f3(), [2] * 9)[0], gen.minimal_belt()[0], gen.minimal_boiler()[0],
          gen.gen_fkl(2, 1)[0]]


@pytest.mark.parametrize("g", CORPUS, ids=lambda g: f"n{g.n}m{g.m}")
def test_certificates_round_trip_through_json(g):
    cert = classify(g)
    text = json.dumps(cert.to_json(g), sort_keys=True)
    back = certificate_from_json(json.loads(text))
    assert back.tag == cert.tag
    assert validate_certificate(g, back)[0]
    assert json.dumps(back.to_json(g) | {"notes": None}, sort_keys=True) == \
        json.dumps(cert.to_json(g) | {"notes": None}, sort_keys=True)


def test_schema_mismatch_is_rejected():
    with pytest.raises(GraphError):
        certificate_from_json({"schema": 99, "tag": BAND})
    with pytest.raises(GraphError):
        certificate_from_json({"schema": 1, "tag": "Nope"})
    with pytest.raises(GraphError):
        certificate_from_json({"schema": 1, "tag": BAND, "parts": {}})


def test_c5_partition_clauses_hold_on_members():
    for g in (named.f1(), named.f2(), named.h5(), named.tight(2)):
        hole = _hole(g, 5) if g.labels and "v1" in g.labels else [0, 2, 4, 6, 8]
        check_c5_partition(g, partition_around_c5(g, hole))
