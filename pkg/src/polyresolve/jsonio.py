"""JSON wire formats for graphs, instances, and certificates.

Emit functions return plain dicts ready for ``json.dump``; parse functions
rebuild the domain objects, and ``parse_*(emit_*(x)) == x`` for every
supported type.  Vertices, items, and clusters are 0-based throughout.
"""

from __future__ import annotations

from typing import Any

from .graphs import Digraph, SimpleGraph, edge, simple_graph
from .oddcover import OddCoverCert
from .oracles import Report
from .perms import CycleSeq, Partition, Resolution
from .polycycles import PolycycleDecomposition
from .resolve import LowerBoundInstance

__all__ = [
    "emit_graph",
    "parse_graph",
    "emit_digraph",
    "parse_digraph",
    "emit_instance",
    "parse_instance",
    "emit_resolution",
    "parse_resolution",
    "emit_cover",
    "parse_cover",
    "emit_decomposition",
    "parse_decomposition",
    "emit_report",
    "parse_report",
    "emit",
]


def _require(d: Any, *keys: str) -> None:
    if not isinstance(d, dict):
        raise ValueError(f"expected a JSON object, got {type(d).__name__}")
    for k in keys:
        if k not in d:
            raise ValueError(f"missing key {k!r}")


def emit_graph(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def parse_graph(d: dict) -> SimpleGraph:
    _require(d, "n", "edges")
    return simple_graph(int(d["n"]), [(int(u), int(v)) for u, v in d["edges"]])


def emit_digraph(g: Digraph) -> dict:
    return {"n": g.n, "arcs": [[t, h] for t, h in zip(g.tails, g.heads)]}


def parse_digraph(d: dict) -> Digraph:
    _require(d, "n", "arcs")
    arcs = [(int(t), int(h)) for t, h in d["arcs"]]
    return Digraph(int(d["n"]), tuple(t for t, _ in arcs), tuple(h for _, h in arcs))


def emit_instance(inst: tuple[Partition, Partition] | LowerBoundInstance) -> dict:
    if isinstance(inst, LowerBoundInstance):
        p, q = inst.p, inst.q
        extra = {"bound": inst.bound, "family": inst.family}
    else:
        p, q = inst
        extra = {}
    if p.n != q.n or p.m != q.m:
        raise ValueError("instance partitions must share items and clusters")
    return {"m": p.m, "n": p.n, "p": list(p.assign), "p_prime": list(q.assign), **extra}


def parse_instance(d: dict) -> tuple[Partition, Partition] | LowerBoundInstance:
    _require(d, "m", "n", "p", "p_prime")
    m, n = int(d["m"]), int(d["n"])
    p = Partition(n, tuple(int(c) for c in d["p"]))
    q = Partition(n, tuple(int(c) for c in d["p_prime"]))
    if p.m != m or q.m != m:
        raise ValueError(f"assignments disagree with m={m}")
    if "bound" in d or "family" in d:
        _require(d, "bound", "family")
        return LowerBoundInstance(p, q, int(d["bound"]), str(d["family"]))
    return p, q


def emit_resolution(res: Resolution) -> dict:
    return {"type": "resolution", "taus": [list(t.items) for t in res.taus]}


def parse_resolution(d: dict, start: Partition) -> Resolution:
    _require(d, "type", "taus")
    if d["type"] != "resolution":
        raise ValueError(f"expected type 'resolution', got {d['type']!r}")
    taus = tuple(CycleSeq(tuple(int(x) for x in t)) for t in d["taus"])
    return Resolution(start, taus)


def emit_cover(cert: OddCoverCert) -> dict:
    return {
        "type": "odd_cover",
        "kind": cert.kind,
        "parts": [[list(e) for e in sorted(part)] for part in cert.parts],
    }


def parse_cover(d: dict) -> OddCoverCert:
    _require(d, "type", "kind", "parts")
    if d["type"] != "odd_cover":
        raise ValueError(f"expected type 'odd_cover', got {d['type']!r}")
    kind = str(d["kind"])
    if kind not in ("path", "cycle", "linear_forest"):
        raise ValueError(f"unknown cover kind {kind!r}")
    parts = tuple(
        frozenset(edge(int(u), int(v)) for u, v in part) for part in d["parts"]
    )
    return OddCoverCert(kind, parts)


def emit_decomposition(dec: PolycycleDecomposition) -> dict:
    parts = []
    for part in dec.parts:
        if all(isinstance(x, int) for x in part):
            parts.append(sorted(part))
        else:
            parts.append([list(e) for e in sorted(part)])
    return {"parts": parts, "cycle_suffix_len": dec.cycle_suffix_len}


def parse_decomposition(d: dict) -> PolycycleDecomposition:
    _require(d, "parts", "cycle_suffix_len")
    parts = []
    for part in d["parts"]:
        if all(isinstance(x, int) for x in part):
            parts.append(frozenset(part))
        else:
            parts.append(frozenset(edge(int(u), int(v)) for u, v in part))
    return PolycycleDecomposition(tuple(parts), int(d["cycle_suffix_len"]))


def emit_report(r: Report) -> dict:
    return {"check": r.check, "pass": r.passed, "detail": r.detail, "elapsed_ms": r.elapsed_ms}


def parse_report(d: dict) -> Report:
    _require(d, "check", "pass", "detail", "elapsed_ms")
    return Report(str(d["check"]), bool(d["pass"]), str(d["detail"]), int(d["elapsed_ms"]))


def emit(x: Any) -> dict:
    """Emit any supported object by type dispatch."""
    if isinstance(x, SimpleGraph):
        return emit_graph(x)
    if isinstance(x, Digraph):
        return emit_digraph(x)
    if isinstance(x, Resolution):
        return emit_resolution(x)
    if isinstance(x, OddCoverCert):
        return emit_cover(x)
    if isinstance(x, PolycycleDecomposition):
        return emit_decomposition(x)
    if isinstance(x, Report):
        return emit_report(x)
    if isinstance(x, LowerBoundInstance) or (
        isinstance(x, tuple) and len(x) == 2 and all(isinstance(p, Partition) for p in x)
    ):
        return emit_instance(x)
    raise TypeError(f"no JSON form for {type(x).__name__}")
