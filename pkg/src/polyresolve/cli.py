"""Command-line surface: generate, construct, verify, and render.

One verb per invocation.  Constructions re-verify their own certificates
before reporting success.  Exit codes: 0 success, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .acceptance import run_acceptance
from .dot import emit_dot
from .errors import PolyresolveError
from .generators import (
    random_delta4_eulerian_graph,
    random_delta4_graph,
    random_graph,
    random_instance,
    random_k2_instance,
)
from .graphs import SimpleGraph, degrees
from .jsonio import (
    emit_cover,
    emit_graph,
    emit_instance,
    emit_report,
    emit_resolution,
    parse_cover,
    parse_graph,
    parse_instance,
    parse_resolution,
)
from .oddcover import (
    OddCoverCert,
    _bounded_cover_search,
    cycle_odd_cover_delta4,
    linear_forest_decomposition,
    odd_cover_eulerian,
    path_odd_cover_delta4,
    path_odd_cover_general,
)
from .oracles import Report, exact_diameter_bfs, verify_certificate
from .perms import cdg
from .resolve import gen_lower_bound_instance, gen_pp36_instance, resolve

__all__ = ["main"]

_GEN_FAMILIES = ("random", "k2", "lowerbound", "pp36", "graph", "eulerian", "delta4")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="polyresolve",
        description="Certified short resolutions between partitions and small odd-covers of graphs.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add(verb: str, help_text: str, **flags) -> argparse.ArgumentParser:
        p = sub.add_parser(verb, help=help_text)
        if flags.get("instance"):
            p.add_argument("--instance", metavar="F", help="instance JSON file")
        if flags.get("graph"):
            p.add_argument("--graph", metavar="F", help="graph JSON file")
        if flags.get("shape"):
            p.add_argument("--shape", metavar="a,b,c", help="cluster sizes, comma separated")
        if flags.get("kind"):
            p.add_argument("--kind", choices=("path", "cycle"), default="path")
        if flags.get("exact"):
            p.add_argument("--exact", action="store_true")
        if flags.get("bound"):
            p.add_argument("--bound", type=int, metavar="L")
        if flags.get("seed"):
            p.add_argument("--seed", type=int, default=0, metavar="N")
        if flags.get("out"):
            p.add_argument("--out", metavar="F", help="write JSON here instead of stdout")
        if flags.get("dot"):
            p.add_argument("--dot", metavar="F", help="also write a DOT rendering here")
        if flags.get("cap"):
            p.add_argument("--cap", type=int, metavar="N", help="state/vertex cap override")
        if flags.get("show_loops"):
            p.add_argument("--show-loops", action="store_true")
        return p

    add("resolve", "build a verified short resolution for an instance",
        instance=True, out=True, dot=True)
    add("oddcover", "build a verified small odd-cover of a graph",
        graph=True, kind=True, exact=True, out=True, dot=True, cap=True)
    add("arboricity", "decompose a max-degree-4 graph into three linear forests",
        graph=True, out=True, dot=True)
    add("diameter", "polytope diameter for a shape (upper bound, or exact BFS)",
        shape=True, exact=True, cap=True)
    add("lowerbound", "emit a hard instance with its proven lower bound",
        shape=True, out=True, dot=True, show_loops=True)
    ver = add("verify", "re-check a certificate against its instance or graph",
              instance=True, graph=True, out=True)
    ver.add_argument("certificate", metavar="CERT", help="certificate JSON file")
    add("gen", "emit a seeded random instance or graph",
        shape=True, seed=True, out=True, dot=True, show_loops=True)
    sub.choices["gen"].add_argument("--family", choices=_GEN_FAMILIES, default="random")
    add("selftest", "run the acceptance suite")
    return top


def _parse_shape(text: str | None) -> tuple[int, ...]:
    if not text:
        raise _UsageError("--shape is required for this verb")
    try:
        shape = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"--shape must be comma-separated integers, got {text!r}")
    if not shape or any(k < 0 for k in shape):
        raise _UsageError("--shape entries must be non-negative")
    return shape


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {path}: {exc}")


def _load_instance(path: str | None):
    if not path:
        raise _UsageError("--instance is required for this verb")
    inst = parse_instance(_load_json(path))
    return (inst.p, inst.q) if hasattr(inst, "bound") else inst


def _load_graph(path: str | None) -> SimpleGraph:
    if not path:
        raise _UsageError("--graph is required for this verb")
    return parse_graph(_load_json(path))


def _write(payload: dict | str, path: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _run_resolve(args) -> int:
    p, q = _load_instance(args.instance)
    res = resolve(p, q)
    report = verify_certificate((p, q), res)
    if not report.passed:
        _write(emit_report(report), None)
        return 1
    _write(emit_resolution(res), args.out)
    if args.dot:
        _write(emit_dot(res), args.dot)
    return 0


def _construct_cover(g: SimpleGraph, kind: str, exact: bool, cap: int | None) -> OddCoverCert:
    d = degrees(g)
    eulerian = d.v_odd == 0
    if kind == "cycle" and not eulerian:
        raise _UsageError("cycle odd-covers need every degree even")
    if exact:
        limit = cap if cap is not None else 8
        if g.n > limit:
            raise _UsageError(f"--exact supports at most {limit} vertices (override with --cap)")
        fallback = _construct_cover(g, kind, False, None)
        parts = _bounded_cover_search(g, kind, len(fallback.parts))
        assert parts is not None, "constructive cover bounds the optimum"
        return OddCoverCert(kind, tuple(parts))
    if eulerian and d.delta <= 4:
        return path_odd_cover_delta4(g) if kind == "path" else cycle_odd_cover_delta4(g)
    if eulerian:
        return odd_cover_eulerian(g, kind)
    return path_odd_cover_general(g)


def _run_oddcover(args) -> int:
    g = _load_graph(args.graph)
    cert = _construct_cover(g, args.kind, args.exact, args.cap)
    report = verify_certificate(g, cert)
    if not report.passed:
        _write(emit_report(report), None)
        return 1
    _write(emit_cover(cert), args.out)
    if args.dot:
        _write(emit_dot(cert), args.dot)
    return 0


def _run_arboricity(args) -> int:
    g = _load_graph(args.graph)
    cert = linear_forest_decomposition(g)
    report = verify_certificate(g, cert)
    if not report.passed:
        _write(emit_report(report), None)
        return 1
    _write(emit_cover(cert), args.out)
    if args.dot:
        _write(emit_dot(cert), args.dot)
    return 0


def _run_diameter(args) -> int:
    shape = _parse_shape(args.shape)
    if args.exact:
        print(exact_diameter_bfs(shape, args.cap))
        return 0
    sizes = sorted(shape, reverse=True)
    k1 = sizes[0] if sizes else 0
    k2 = sizes[1] if len(sizes) > 1 else 0
    print(k1 + (k2 + 1) // 2)
    return 0


def _run_lowerbound(args) -> int:
    shape = _parse_shape(args.shape)
    inst = gen_lower_bound_instance(shape)
    _write(emit_instance(inst), args.out)
    if args.dot:
        _write(emit_dot(cdg(inst.p, inst.q), show_loops=args.show_loops), args.dot)
    return 0


def _run_verify(args) -> int:
    data = _load_json(args.certificate)
    if not isinstance(data, dict) or "type" not in data:
        raise _UsageError(f"{args.certificate} is not a certificate (missing 'type')")
    try:
        if data["type"] == "resolution":
            p, q = _load_instance(args.instance)
            report = verify_certificate((p, q), parse_resolution(data, p))
        elif data["type"] == "odd_cover":
            g = _load_graph(args.graph)
            report = verify_certificate(g, parse_cover(data))
        else:
            raise _UsageError(f"unknown certificate type {data['type']!r}")
    except (ValueError, PolyresolveError) as exc:
        report = Report("certificate", False, f"malformed certificate: {exc}", 0)
    _write(emit_report(report), args.out)
    return 0 if report.passed else 1


def _run_gen(args) -> int:
    rng = random.Random(args.seed)
    family = args.family
    dot_obj = None
    if family in ("random", "k2", "lowerbound", "pp36"):
        if family == "random":
            inst = random_instance(rng)
        elif family == "k2":
            inst = random_k2_instance(rng)
        elif family == "lowerbound":
            inst = gen_lower_bound_instance(_parse_shape(args.shape))
        else:
            inst = gen_pp36_instance()
        _write(emit_instance(inst), args.out)
        pair = (inst.p, inst.q) if hasattr(inst, "bound") else inst
        dot_obj = cdg(*pair)
    else:
        if family == "graph":
            g = random_graph(rng)
        elif family == "eulerian":
            g = random_delta4_eulerian_graph(rng)
        else:
            g = random_delta4_graph(rng)
        _write(emit_graph(g), args.out)
        dot_obj = g
    if args.dot:
        _write(emit_dot(dot_obj, show_loops=args.show_loops), args.dot)
    return 0


def _run_selftest(args) -> int:
    reports = run_acceptance()
    ok = True
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        ok = ok and rep.passed
        print(f"{status} {rep.check}: {rep.detail} ({rep.elapsed_ms} ms)")
    print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return 0 if ok else 1


_DISPATCH = {
    "resolve": _run_resolve,
    "oddcover": _run_oddcover,
    "arboricity": _run_arboricity,
    "diameter": _run_diameter,
    "lowerbound": _run_lowerbound,
    "verify": _run_verify,
    "gen": _run_gen,
    "selftest": _run_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PolyresolveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
