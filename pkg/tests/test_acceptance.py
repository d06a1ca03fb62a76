"""Acceptance criteria; each test prints one PASS/FAIL line (also listed in the pytest summary)."""

import itertools
import json
import os
import random
import subprocess
import sys
import time

import networkx as nx

from p6c4 import generators as gen
from p6c4 import named, oracle
from p6c4.blowup import blowup_graph, match_blowup, validate_blowup
from p6c4.cli import BENCH_FAMILIES, bench_specs, strip_timestamp
from p6c4.coloring import bound54, color, reed_bound
from p6c4.detect import SPECIAL, find_induced_cycle, find_induced_path, find_special, is_p6c4_free
from p6c4.io import write_graph
from p6c4.structure import classify, validate_certificate
from p6c4.trivially_perfect import build_bamboo, expand_bamboos

from helpers import (brute_has_cycle, brute_has_path, brute_induced, criterion, random_graph,
                     random_trivially_perfect, to_nx)

PER_FAMILY = int(os.environ.get("P6C4_ACCEPT_PER_FAMILY", "500"))


@criterion(1, "Petersen 2-blowup: chi = 5, omega = 4, engine 5 = bound54, under 1 s")
def test_petersen_two_blowup():
    t0 = time.perf_counter()
    g = blowup_graph(named.petersen(), [2] * 10, "H1")[0]
    assert g.n == 20
    assert oracle.exact_chromatic(g).value == 5
    assert oracle.exact_clique(g).value == 4
    r = color(g)
    assert r.report.chi_alg == 5 == r.report.bound54 and r.fallbacks == 0
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"took {elapsed:.2f}s"


@criterion(2, "F3 2-blowup: chi = 7, bound54 = 8, engine <= 8, under 10 s")
def test_f3_two_blowup():
    t0 = time.perf_counter()
    g = blowup_graph(named.f3(), [2] * 9, "F3")[0]
    assert g.n == 18
    assert oracle.exact_chromatic(g).value == 7
    r = color(g)
    assert r.report.omega == 6 and r.report.bound54 == 8
    assert r.report.chi_alg <= 8 and r.fallbacks == 0
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    return f"engine used {r.report.chi_alg}"


@criterion(3, "tight family q = 1, 2, 3: chi = bound54 = Reed = ceil(5q/2), engine exact, under 60 s")
def test_tightness_family():
    t0 = time.perf_counter()
    for q, want in ((1, 3), (2, 5), (3, 8)):
        g = gen.tight(q)[0]
        omega = oracle.exact_clique(g).value
        delta = max(g.degree(v) for v in range(g.n))
        assert (omega, delta) == (2 * q, 3 * q - 1)
        chi = oracle.exact_chromatic(g).value
        assert chi == want == bound54(omega) == reed_bound(delta, omega) == (5 * q + 1) // 2
        assert color(g).report.chi_alg == want
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"took {elapsed:.2f}s"


@criterion(4, "10,000 random (P6,C4)-free graphs, n <= 9: chi within both bounds")
def test_bounds_at_desk_scale():
    rng = random.Random(4)
    members = sampled = 0
    bad54 = bad_reed = 0
    while members < 10_000:
        n = rng.randint(1, 9)
        g = random_graph(n, rng.choice((0.2, 0.35, 0.5, 0.65, 0.8)), rng.randrange(1 << 40))
        sampled += 1
        if not is_p6c4_free(g)[0]:
            continue
        members += 1
        omega = oracle.exact_clique(g).value
        delta = max((g.degree(v) for v in range(g.n)), default=0)
        chi = oracle.exact_chromatic(g).value
        bad54 += chi > bound54(omega)
        bad_reed += chi > reed_bound(delta, omega)
    assert bad54 == 0 and bad_reed == 0, (bad54, bad_reed)
    return f"{members} members of {sampled} sampled"


@criterion(5, f"structure coverage: {PER_FAMILY} instances x {len(BENCH_FAMILIES)} families certified, no fallback")
def test_structure_coverage():
    failures = []
    fallbacks = []
    total = 0
    for name, family, params in BENCH_FAMILIES:
        for spec, g in bench_specs(name, family, params, PER_FAMILY):
            total += 1
            cert = classify(g)
            ok, why = validate_certificate(g, cert)
            if not ok:
                failures.append((name, spec.seed, why.axiom))
            res = color(g)
            if res.fallbacks:
                fallbacks.append((name, spec.seed))
            assert res.report.chi_alg <= res.report.bound54
    assert not failures, failures[:5]
    assert not fallbacks, fallbacks[:5]
    return f"{total} instances"


@criterion(6, "detectors agree with subset enumeration on 200 graphs, n <= 10")
def test_detector_cross_validation():
    checks = 0
    for seed in range(200):
        n = 5 + seed % 6
        g = random_graph(n, 0.2 + 0.6 * ((seed * 7) % 11) / 10, 1000 + seed)
        for k in (4, 5, 6):
            assert (find_induced_path(g, k) is not None) == brute_has_path(g, k), (seed, "P", k)
            assert (find_induced_cycle(g, k) is not None) == brute_has_cycle(g, k), (seed, "C", k)
            checks += 2
        for which in SPECIAL:
            if SPECIAL[which]().n > n:
                continue
            assert (find_special(g, which) is not None) == bool(brute_induced(g, SPECIAL[which]())), (seed, which)
            checks += 1
    return f"{checks} comparisons"


@criterion(7, "round trips: bamboo expansion and blowup matching on every sample")
def test_round_trips():
    rng = random.Random(7)
    bamboos = 0
    while bamboos < 300:
        g = random_trivially_perfect(rng, max_nodes=7)
        if brute_induced(g, named.two_p3()):
            continue
        assert expand_bamboos(g.n, build_bamboo(g)) == g
        bamboos += 1
    blowups = 0
    for name in ("C5", "H1", "H2", "H3", "H4", "H5", "F3", "P3", "DART", "F_1_1", "F_2_1"):
        base = named.base_graph(name)
        for _ in range(40):
            sizes = [rng.randint(0, 3) for _ in range(base.n)]
            g, _ = blowup_graph(base, sizes, name)
            bm = match_blowup(g, base, name)
            assert bm is not None, (name, sizes)
            validate_blowup(g, bm)
            blowups += 1
    return f"{bamboos} bamboos, {blowups} blowups"


def _cli(args, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    out = subprocess.run([sys.executable, "-m", "p6c4.cli", *args], capture_output=True, text=True, env=env)
    return out.returncode, out.stdout


@criterion(8, "decompose and color output is byte-identical across runs, timestamp excluded")
def test_determinism(tmp_path):
    inputs = [named.f1(), named.petersen(), blowup_graph(named.f3(), [2] * 9)[0], gen.minimal_boiler()[0],
              gen.generate(gen.GenSpec(gen.GLUED, 3))[0], gen.generate(gen.GenSpec(gen.BELT, 5))[0]]
    paths = []
    for i, g in enumerate(inputs):
        p = tmp_path / f"g{i}.txt"
        write_graph(g, p)
        paths.append(str(p))
    compared = 0
    for cmd in ("decompose", "color"):
        runs = [_cli([cmd, *paths], seed) for seed in (0, 1, 12345)]
        assert all(code == 0 for code, _ in runs)
        texts = []
        for _, out in runs:
            recs = [strip_timestamp(json.loads(line)) for line in out.splitlines()]
            assert len(recs) == len(paths)
            texts.append("\n".join(json.dumps(r, sort_keys=True) for r in recs))
        assert texts[0] == texts[1] == texts[2]
        compared += len(paths)
    return f"{compared} outputs compared across 3 processes"


def test_acceptance_inputs_are_members():
    for g in (blowup_graph(named.petersen(), [2] * 10)[0], blowup_graph(named.f3(), [2] * 9)[0], gen.tight(3)[0]):
        assert is_p6c4_free(g)[0]
        assert nx.is_connected(to_nx(g))
    assert list(itertools.islice(bench_specs(*BENCH_FAMILIES[0], 1), 1))
