"""Command-line interface: recognize, decompose, color, exact, gen, verify, bench.

Exit codes: 0 success, 1 usage or IO error, 2 input not (P6, C4)-free,
3 internal invariant failure.
"""

from __future__ import annotations

import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

import click

from . import oracle
from .coloring import color
from .detect import is_p6c4_free
from .generators import FAMILIES, GenSpec, generate
from .graph import Coloring, GraphError, Violation, components_mask
from .io import ParseError, read_graphs, write_graph
from .structure import NotInClass, StructureFailure, certificate_from_json, classify, validate_certificate

EXIT_OK, EXIT_USAGE, EXIT_NOT_IN_CLASS, EXIT_INTERNAL = 0, 1, 2, 3
TIMESTAMP_FIELD = "timestamp"
FORMATS = click.Choice(["edge-list", "graph6"])


class CliFailure(Exception):
    def __init__(self, code: int, payload: dict):
        self.code = code
        self.payload = payload
        super().__init__(payload.get("error", ""))


def _stamp(out: dict) -> dict:
    out[TIMESTAMP_FIELD] = datetime.now(timezone.utc).isoformat()
    return out


def strip_timestamp(obj):
    """Drop timestamp fields recursively; used for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_timestamp(v) for k, v in obj.items() if k != TIMESTAMP_FIELD}
    if isinstance(obj, list):
        return [strip_timestamp(v) for v in obj]
    return obj


def _emit(obj: dict, pretty: bool) -> None:
    click.echo(json.dumps(obj, sort_keys=True, indent=2 if pretty else None))


def _load(path: str, fmt: str | None) -> list:
    try:
        return read_graphs(path, fmt)
    except ParseError as exc:
        raise CliFailure(EXIT_USAGE, {"error": "parse", "path": path, "line": exc.line, "message": str(exc)})
    except OSError as exc:
        raise CliFailure(EXIT_USAGE, {"error": "io", "path": path, "message": str(exc)})


def _check_cap(g, cap: int | None, force: bool) -> None:
    limit = oracle.chi_cap() if cap is None else cap
    if g.n > limit and not force:
        raise CliFailure(EXIT_USAGE, {"error": "exact_cap", "n": g.n, "cap": limit,
                                      "message": "graph exceeds the exact oracle cap; pass --force-exact"})


# ---------------------------------------------------------------- per-graph jobs

def job_recognize(g, opts: dict) -> tuple[int, dict]:
    ok, w = is_p6c4_free(g)
    if ok:
        return EXIT_OK, {"n": g.n, "m": g.m, "member": True, "verdict": "(P6,C4)-free"}
    return EXIT_NOT_IN_CLASS, {"n": g.n, "m": g.m, "member": False, "verdict": f"not {w.kind}-free",
                               "witness": w.to_json()}


def job_decompose(g, opts: dict) -> tuple[int, dict]:
    if g.n and len(components_mask(g)) > 1:
        return EXIT_USAGE, {"error": "disconnected", "message": "decompose expects a connected graph"}
    cert = classify(g)
    return EXIT_OK, {"n": g.n, "certificate": cert.to_json(g)}


def job_color(g, opts: dict) -> tuple[int, dict]:
    with_exact = bool(opts.get("exact"))
    if with_exact:
        _check_cap(g, opts.get("exact_cap"), bool(opts.get("force_exact")))
    res = color(g, with_exact=with_exact, exact_cap=opts.get("exact_cap"))
    report = res.report
    if with_exact and report.chi_exact is None:
        # bounds() honours the configured cap; an explicit override recomputes here
        report = replace(report, chi_exact=oracle.exact_chromatic(g).value)
    out = {"n": g.n, "assignment": list(res.coloring.assignment), **report.to_json(),
           "fallbacks": res.fallbacks}
    if opts.get("trace"):
        out["trace"] = [s.to_json() for s in res.trace]
    return EXIT_OK, out


def job_exact(g, opts: dict) -> tuple[int, dict]:
    _check_cap(g, opts.get("exact_cap"), bool(opts.get("force_exact")))
    om = oracle.exact_clique(g)
    ch = oracle.exact_chromatic(g)
    return EXIT_OK, {"n": g.n, "omega": om.value, "clique": list(om.witness), "chi": ch.value,
                     "coloring": list(ch.witness), "nodes_explored": om.nodes_explored + ch.nodes_explored}


JOBS = {"recognize": job_recognize, "decompose": job_decompose, "color": job_color, "exact": job_exact}


def run_job(name: str, g, opts: dict) -> tuple[int, dict]:
    """Run one command on one graph, mapping failures onto exit codes."""
    try:
        return JOBS[name](g, opts)
    except CliFailure as exc:
        return exc.code, exc.payload
    except NotInClass as exc:
        return EXIT_NOT_IN_CLASS, {"error": "not_in_class", "verdict": f"not {exc.witness.kind}-free",
                                   "witness": exc.witness.to_json()}
    except StructureFailure as exc:
        return EXIT_INTERNAL, {"error": "structure_failure", "message": str(exc), "analysis": exc.analysis}
    except (RuntimeError, AssertionError) as exc:
        return EXIT_INTERNAL, {"error": "internal", "message": str(exc)}
    except GraphError as exc:
        return EXIT_USAGE, {"error": "graph", "message": str(exc)}


def _manifest(path: str) -> list[tuple[str, str | None]]:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError:
            entry = line
        if isinstance(entry, str):
            out.append((entry, None))
        elif isinstance(entry, dict) and "path" in entry:
            out.append((str(entry["path"]), entry.get("format")))
        else:
            raise CliFailure(EXIT_USAGE, {"error": "manifest", "line": lineno, "message": "expected a path"})
    return out


def _batch_task(args: tuple) -> list[tuple[int, dict]]:
    name, path, fmt, opts = args
    try:
        graphs = _load(path, fmt)
    except CliFailure as exc:
        return [(exc.code, exc.payload)]
    return [run_job(name, g, opts) for g in graphs]


def _run(name: str, inputs: tuple[str, ...], fmt: str | None, manifest: str | None, jobs: int,
         pretty: bool, opts: dict) -> None:
    try:
        entries = [(p, fmt) for p in inputs] + (_manifest(manifest) if manifest else [])
    except (CliFailure, OSError) as exc:
        payload = exc.payload if isinstance(exc, CliFailure) else {"error": "io", "message": str(exc)}
        _emit(payload, pretty)
        sys.exit(EXIT_USAGE)
    if not entries:
        _emit({"error": "usage", "message": "no input given"}, pretty)
        sys.exit(EXIT_USAGE)
    tasks = [(name, p, f, opts) for p, f in entries]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_task, tasks))  # map keeps input order
    else:
        results = [_batch_task(t) for t in tasks]
    worst = EXIT_OK
    for (_, path, _, _), per_file in zip(tasks, results):
        for index, (code, payload) in enumerate(per_file):
            record = {"command": name, "input": path, "index": index, "exit": code, **payload}
            _emit(_stamp(record), pretty)
            worst = max(worst, code)
    sys.exit(worst)


# ---------------------------------------------------------------- click surface

def _common(f):
    f = click.option("--pretty", is_flag=True, help="Indent JSON output.")(f)
    f = click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for batch runs.")(f)
    f = click.option("--manifest", type=click.Path(), help="File listing one input per line (path or JSON).")(f)
    f = click.option("--format", "fmt", type=FORMATS, help="Override format detection.")(f)
    f = click.argument("inputs", nargs=-1, type=click.Path())(f)
    return f


def _cap_options(f):
    f = click.option("--force-exact", is_flag=True, help="Run the exact oracle above the size cap.")(f)
    f = click.option("--exact-cap", type=int, default=None,
                     help=f"Vertex cap for exact coloring (default ${oracle.CAP_ENV} or {oracle.DEFAULT_CHI_CAP}).")(f)
    return f


@click.group()
def main() -> None:
    """Recognize, decompose and color (P6, C4)-free graphs."""


@main.command()
@_common
def recognize(inputs, fmt, manifest, jobs, pretty):
    """Report whether each graph is (P6, C4)-free, with a witness if not."""
    _run("recognize", inputs, fmt, manifest, jobs, pretty, {})


@main.command()
@_common
def decompose(inputs, fmt, manifest, jobs, pretty):
    """Print a validated structure certificate for each graph."""
    _run("decompose", inputs, fmt, manifest, jobs, pretty, {})


@main.command("color")
@_common
@_cap_options
@click.option("--exact", is_flag=True, help="Also compute chi exactly.")
@click.option("--trace", is_flag=True, help="Include the derivation trace.")
def color_cmd(inputs, fmt, manifest, jobs, pretty, force_exact, exact_cap, exact, trace):
    """Color each graph within ceil(5 omega / 4) colors."""
    _run("color", inputs, fmt, manifest, jobs, pretty,
         {"exact": exact, "trace": trace, "exact_cap": exact_cap, "force_exact": force_exact})


@main.command()
@_common
@_cap_options
def exact(inputs, fmt, manifest, jobs, pretty, force_exact, exact_cap):
    """Exact clique and chromatic numbers with witnesses."""
    _run("exact", inputs, fmt, manifest, jobs, pretty, {"exact_cap": exact_cap, "force_exact": force_exact})


def _param_value(raw: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


@main.command()
@click.argument("family")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--q", type=int, help="Tight example parameter.")
@click.option("--k", type=int, help="F_{k,l} or boiler parameter.")
@click.option("--l", "l_", type=int, help="F_{k,l} parameter.")
@click.option("--base", help="Base graph for blowups (H1..H5, F3, C5, F_k_l).")
@click.option("--n", type=int, help="Vertex count for random graphs.")
@click.option("--param", "params", multiple=True, help="Extra key=value parameter (value parsed as JSON).")
@click.option("--spec", "spec_path", type=click.Path(exists=True), help="GenSpec JSON file.")
@click.option("-o", "--output", type=click.Path(), help="Graph file; the sidecar goes to OUTPUT.json.")
@click.option("--format", "fmt", type=FORMATS, help="Override output format detection.")
@click.option("--pretty", is_flag=True)
def gen(family, seed, q, k, l_, base, n, params, spec_path, output, fmt, pretty):
    """Generate an instance of FAMILY deterministically from a seed."""
    try:
        if spec_path:
            spec = GenSpec.from_json(json.loads(Path(spec_path).read_text()))
        else:
            p: dict = {}
            for key, val in (("q", q), ("k", k), ("l", l_), ("base", base), ("n", n)):
                if val is not None:
                    p[key] = val
            for item in params:
                key, sep, raw = item.partition("=")
                if not sep:
                    raise GraphError(f"--param expects key=value, got {item!r}")
                p[key] = _param_value(raw)
            spec = GenSpec(family.upper(), seed, p)
        if spec.family not in FAMILIES:
            raise GraphError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")
        g, side = generate(spec)
    except (GraphError, ValueError, OSError) as exc:
        _emit({"command": "gen", "exit": EXIT_USAGE, "error": "generation", "message": str(exc)}, pretty)
        sys.exit(EXIT_USAGE)
    record = {"command": "gen", "exit": EXIT_OK, "n": g.n, "m": g.m, "spec": spec.to_json()}
    if output:
        write_graph(g, output, fmt)
        Path(output + ".json").write_text(json.dumps(side, sort_keys=True, indent=2) + "\n")
        record["output"] = output
        record["sidecar"] = output + ".json"
    else:
        record["edges"] = [list(e) for e in g.edges()]
        record["sidecar"] = side
    _emit(_stamp(record), pretty)


@main.command()
@click.argument("graph", type=click.Path())
@click.option("--certificate", type=click.Path(exists=True), help="Certificate JSON from decompose.")
@click.option("--coloring", type=click.Path(exists=True), help="JSON list of colors, or color output.")
@click.option("--format", "fmt", type=FORMATS)
@click.option("--pretty", is_flag=True)
def verify(graph, certificate, coloring, fmt, pretty):
    """Check a certificate or a coloring against GRAPH."""
    try:
        if (certificate is None) == (coloring is None):
            raise CliFailure(EXIT_USAGE, {"error": "usage", "message": "give exactly one of --certificate, --coloring"})
        graphs = _load(graph, fmt)
        if len(graphs) != 1:
            raise CliFailure(EXIT_USAGE, {"error": "usage", "message": "verify expects a single graph"})
        g = graphs[0]
        data = json.loads(Path(certificate or coloring).read_text())
        if certificate:
            if isinstance(data, dict) and "certificate" in data:
                data = data["certificate"]
            try:
                cert = certificate_from_json(data)
            except GraphError as exc:
                raise CliFailure(EXIT_USAGE, {"error": "schema", "message": str(exc)})
            ok, why = validate_certificate(g, cert)
            out = {"kind": "certificate", "pass": ok}
            if not ok:
                out["violation"] = why.to_json() if isinstance(why, Violation) else str(why)
        else:
            assignment = data.get("assignment") if isinstance(data, dict) else data
            if not isinstance(assignment, list) or len(assignment) != g.n:
                raise CliFailure(EXIT_USAGE, {"error": "schema", "message": f"coloring must list {g.n} colors"})
            ok, bad = oracle.verify_coloring(g, Coloring(tuple(int(c) for c in assignment)))
            out = {"kind": "coloring", "pass": ok, "colors": len(set(assignment))}
            if not ok:
                out["edge"] = list(bad)
    except CliFailure as exc:
        _emit({"command": "verify", "exit": exc.code, **exc.payload}, pretty)
        sys.exit(exc.code)
    except (OSError, json.JSONDecodeError) as exc:
        _emit({"command": "verify", "exit": EXIT_USAGE, "error": "io", "message": str(exc)}, pretty)
        sys.exit(EXIT_USAGE)
    _emit(_stamp({"command": "verify", "exit": EXIT_OK if ok else EXIT_NOT_IN_CLASS, **out}), pretty)
    sys.exit(EXIT_OK if ok else EXIT_NOT_IN_CLASS)


BENCH_FAMILIES = (
    [("blowup_" + b, "BLOWUP", {"base": b}) for b in ("H1", "H2", "H3", "H4", "H5", "F3", "C5")]
    + [("fkl", "FKL", None), ("band", "BAND", {}), ("belt", "BELT", {}), ("boiler", "BOILER", {}),
       ("glued", "GLUED", {})]
)


def bench_specs(name: str, family: str, params: dict | None, count: int):
    """First ``count`` connected instances of a bench family, in seed order."""
    seed = 0
    got = 0
    while got < count:
        p = params if params is not None else {"k": 1 + seed % 3, "l": 1 + seed // 3 % 3, "random_sizes": True}
        spec = GenSpec(family, seed, p)
        seed += 1
        g, _ = generate(spec)
        if g.n == 0 or len(components_mask(g)) > 1:
            continue
        got += 1
        yield spec, g


@main.command()
@click.option("--per-family", type=int, default=20, show_default=True)
@click.option("--family", "only", multiple=True, help="Restrict to these bench family names.")
@click.option("--pretty", is_flag=True)
def bench(per_family, only, pretty):
    """Classify, validate and color generated instances of every family."""
    worst = EXIT_OK
    for name, family, params in BENCH_FAMILIES:
        if only and name not in only:
            continue
        t0 = time.perf_counter()
        stats = {"instances": 0, "certified": 0, "fallbacks": 0, "over_bound": 0, "provenance": {}}
        for _, g in bench_specs(name, family, params, per_family):
            stats["instances"] += 1
            try:
                cert = classify(g)
                ok, _ = validate_certificate(g, cert)
                res = color(g)
            except (StructureFailure, RuntimeError):
                worst = EXIT_INTERNAL
                continue
            stats["certified"] += ok
            stats["provenance"][cert.provenance] = stats["provenance"].get(cert.provenance, 0) + 1
            stats["fallbacks"] += res.fallbacks > 0
            stats["over_bound"] += res.report.chi_alg > res.report.bound54
        if stats["certified"] < stats["instances"] or stats["fallbacks"]:
            worst = max(worst, EXIT_INTERNAL)
        stats["seconds"] = round(time.perf_counter() - t0, 3)
        _emit(_stamp({"command": "bench", "family": name, **stats}), pretty)
    sys.exit(worst)


__all__ = ["EXIT_INTERNAL", "EXIT_NOT_IN_CLASS", "EXIT_OK", "EXIT_USAGE", "bench_specs", "main", "run_job",
           "strip_timestamp"]


if __name__ == "__main__":
    main()
