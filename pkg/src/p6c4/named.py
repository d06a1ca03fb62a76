"""Named graphs used by the structure classifier and the coloring engine.

Every constructor returns a labelled :class:`Graph`. Vertex order is part of
the contract: detectors report witnesses in this order.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .graph import Graph, GraphError, build_graph


def _labelled(labels: list[str], edges: Iterable[tuple[str, str]]) -> Graph:
    pos = {s: i for i, s in enumerate(labels)}
    return build_graph(len(labels), [(pos[u], pos[v]) for u, v in edges], labels)


def _ring(names: list[str]) -> list[tuple[str, str]]:
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _vs(k: int) -> list[str]:
    return [f"v{i}" for i in range(1, k + 1)]


def path(k: int) -> Graph:
    names = _vs(k)
    return _labelled(names, [(names[i], names[i + 1]) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return _labelled(_vs(k), _ring(_vs(k)))


def complete(k: int) -> Graph:
    names = _vs(k)
    return _labelled(names, [(names[i], names[j]) for i in range(k) for j in range(i + 1, k)])


def c5() -> Graph:
    return cycle(5)


def c6() -> Graph:
    return cycle(6)


def p3() -> Graph:
    return path(3)


def two_p3() -> Graph:
    names = ["a1", "a2", "a3", "b1", "b2", "b3"]
    return _labelled(names, [("a1", "a2"), ("a2", "a3"), ("b1", "b2"), ("b2", "b3")])


def dart() -> Graph:
    """Diamond a,b,c,d (missing bd) with a pendant e on c."""
    return _labelled(list("abcde"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c"), ("c", "e")])


def petersen() -> Graph:
    """H1: centre z, its neighbours a, b, c, and a hexagon w1..w6.

    a sees w1, w4; b sees w2, w5; c sees w3, w6.
    """
    ws = [f"w{i}" for i in range(1, 7)]
    edges = [("z", "a"), ("z", "b"), ("z", "c"), ("a", "w1"), ("a", "w4"), ("b", "w2"), ("b", "w5"),
             ("c", "w3"), ("c", "w6")] + _ring(ws)
    return _labelled(["z", "a", "b", "c"] + ws, edges)


h1 = petersen


def _c6_plus(extra: dict[str, list[int]], extra_edges: list[tuple[str, str]]) -> Graph:
    vs = _vs(6)
    edges = _ring(vs)
    for name, idx in extra.items():
        edges += [(name, f"v{i}") for i in idx]
    return _labelled(vs + list(extra), edges + extra_edges)


def h2() -> Graph:
    """C6 plus a triangle a, b, c with a ~ v6 v1 v2 v3, b ~ v3 v4 v5 v6, c ~ v3 v6."""
    return _c6_plus({"a": [6, 1, 2, 3], "b": [3, 4, 5, 6], "c": [3, 6]}, [("a", "b"), ("a", "c"), ("b", "c")])


def h3() -> Graph:
    """Square of C9 on v1..v9."""
    vs = _vs(9)
    return _labelled(vs, [(vs[i], vs[(i + d) % 9]) for i in range(9) for d in (1, 2)])


def h4() -> Graph:
    """C6 plus b1 ~ v6 v1 v2 v3, b2 ~ v1..v4, b3 ~ v2..v5, with b1b2 and b2b3."""
    return _c6_plus({"b1": [6, 1, 2, 3], "b2": [1, 2, 3, 4], "b3": [2, 3, 4, 5]}, [("b1", "b2"), ("b2", "b3")])


def h5() -> Graph:
    """C5 v1..v5 plus a stable set t1..t5, t_i ~ v_{i-1} v_i v_{i+1}."""
    vs = _vs(5)
    ts = [f"t{i}" for i in range(1, 6)]
    edges = _ring(vs)
    for i in range(5):
        edges += [(ts[i], vs[(i + d) % 5]) for d in (-1, 0, 1)]
    return _labelled(vs + ts, edges)


def f1() -> Graph:
    """C5 plus a path x-y-z with x ~ v1 v2, y ~ v2 v3, z ~ v3 v4."""
    vs = _vs(5)
    edges = _ring(vs) + [("x", "v1"), ("x", "v2"), ("y", "v2"), ("y", "v3"), ("z", "v3"), ("z", "v4"),
                         ("x", "y"), ("y", "z")]
    return _labelled(vs + ["x", "y", "z"], edges)


def f2() -> Graph:
    """C5 plus x ~ v1 v2, y ~ v3 v4, t ~ v4 v5 v1, with tx and ty."""
    vs = _vs(5)
    edges = _ring(vs) + [("x", "v1"), ("x", "v2"), ("y", "v3"), ("y", "v4"), ("t", "v4"), ("t", "v5"),
                         ("t", "v1"), ("t", "x"), ("t", "y")]
    return _labelled(vs + ["x", "y", "t"], edges)


def f3() -> Graph:
    """C6 plus a triangle x, y, z with x ~ v1 v2 v3, y ~ v3 v4 v5, z ~ v5 v6 v1."""
    return _c6_plus({"x": [1, 2, 3], "y": [3, 4, 5], "z": [5, 6, 1]}, [("x", "y"), ("y", "z"), ("x", "z")])


def fkl(k: int, l: int) -> Graph:
    """The graph F_{k,l}; order a0..ak, u1..uk, b0..bl, w1..wl, x, y, z."""
    if k < 0 or l < 0:
        raise GraphError("k and l must be non-negative")
    a = [f"a{i}" for i in range(k + 1)]
    u = [f"u{i}" for i in range(1, k + 1)]
    b = [f"b{j}" for j in range(l + 1)]
    w = [f"w{j}" for j in range(1, l + 1)]
    edges = [(a[i], a[j]) for i in range(k + 1) for j in range(i + 1, k + 1)]
    edges += [(b[i], b[j]) for i in range(l + 1) for j in range(i + 1, l + 1)]
    edges += [(a[i], u[i - 1]) for i in range(1, k + 1)]
    edges += [(b[j], w[j - 1]) for j in range(1, l + 1)]
    edges += [("x", v) for v in a + u + w] + [("x", "y")]
    edges += [("y", v) for v in b + u + w]
    edges += [("z", v) for v in a + b]
    return _labelled(a + u + b + w + ["x", "y", "z"], edges)


def tight(q: int) -> Graph:
    """C5 with every vertex replaced by a q-clique."""
    from .blowup import blowup_graph

    return blowup_graph(c5(), [q] * 5)[0]


BASES: dict[str, Callable[[], Graph]] = {
    "C5": c5,
    "C6": c6,
    "P3": p3,
    "DART": dart,
    "H1": h1,
    "H2": h2,
    "H3": h3,
    "H4": h4,
    "H5": h5,
    "F1": f1,
    "F2": f2,
    "F3": f3,
}


def base_graph(name: str) -> Graph:
    """Resolve a base name; ``F_k_l`` / ``Fk,l`` style names build F_{k,l}."""
    key = name.upper().replace(" ", "")
    if key in BASES:
        return BASES[key]()
    for prefix in ("FKL_", "F_", "F"):
        if key.startswith(prefix):
            rest = key[len(prefix):].replace("_", ",")
            parts = rest.split(",")
            if len(parts) == 2 and all(p.isdigit() for p in parts):
                return fkl(int(parts[0]), int(parts[1]))
    raise GraphError(f"unknown base graph {name!r}")


def fkl_name(k: int, l: int) -> str:
    return f"F_{k}_{l}"
