"""Brute-force and pruned-search oracles for desk-scale cross-checking.

Everything here answers by explicit state-space search, independent of the
constructive modules: polytope diameters and shortest resolutions by BFS
over partition states, minimum odd-covers by exhaustive part enumeration,
Hamiltonicity by backtracking, and a pruned move-accounting search that
certifies the absence of short resolutions for the doubled-2-cycle family.
A unified certificate checker reports the first violated invariant.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

from .errors import FamilyMismatch, ShapeMismatch, TooLarge
from .graphs import SimpleGraph, SubgraphShape, classify, symmetric_difference
from .oddcover import OddCoverCert, _bounded_cover_search
from .perms import CycleSeq, Partition, Resolution, check_resolution, verify_resolution
from .resolve import PP36_FIRST_MOVE, gen_pp36_instance

__all__ = [
    "MoveAccounting",
    "Report",
    "move_accounting",
    "exact_diameter_bfs",
    "min_resolution_length",
    "pruned_no_short_resolution",
    "min_odd_cover_exhaustive",
    "is_hamiltonian",
    "verify_certificate",
]

DEFAULT_STATE_CAP = 100_000
_FOREST_SHAPES = (SubgraphShape.EMPTY, SubgraphShape.PATH, SubgraphShape.LINEAR_FOREST)


def _state_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("POLYRESOLVE_CAP")
    return int(env) if env else DEFAULT_STATE_CAP


@dataclass(frozen=True)
class MoveAccounting:
    """Whole/half move tally of one cyclic exchange.

    A whole move takes an item straight from its source cluster to its
    target cluster (worth 2 progress units); a half move does exactly one
    of leaving the source or reaching the target (worth 1).
    """

    whole_moves: int
    half_moves: int
    gain: int

    def __post_init__(self):
        assert self.gain == 2 * self.whole_moves + self.half_moves


def move_accounting(p: Partition, q: Partition, cur: Partition, tau: CycleSeq) -> MoveAccounting:
    """Tally the whole and half moves ``tau`` makes at the state ``cur``."""
    nxt = cur.apply(tau)
    whole = half = 0
    for x in tau.items:
        at_source = cur(x) == p(x)
        at_target = nxt(x) == q(x)
        if at_source and at_target:
            whole += 1
        elif at_source != at_target:
            half += 1
    return MoveAccounting(whole, half, 2 * whole + half)


def _cluster_items(state: tuple[int, ...], n: int) -> list[list[int]]:
    by: list[list[int]] = [[] for _ in range(n)]
    for x, c in enumerate(state):
        by[c].append(x)
    return by


def _apply_cycle(state: tuple[int, ...], items: tuple[int, ...]) -> tuple[int, ...]:
    """Right action of the cycle: each listed item lands in the current
    cluster of its successor."""
    nxt = list(state)
    k = len(items)
    for idx, x in enumerate(items):
        nxt[x] = state[items[(idx + 1) % k]]
    return tuple(nxt)


def _iter_cycles(
    state: tuple[int, ...],
    n: int,
    by: list[list[int]],
    *,
    full: bool = False,
    gain_fn=None,
    floor: int | None = None,
    forced: bool = False,
) -> Iterator[tuple[tuple[int, ...], int | None]]:
    """Yield (items, gain) for state-cycles, anchored at their smallest cluster.

    ``full`` restricts to cycles visiting every cluster; ``floor`` drops
    cycles whose gain falls short; ``forced`` additionally requires every
    single move to gain, which is sound only when the step's total gain is
    pinned to the per-step maximum.
    """
    occupied = [c for c in range(n) if by[c]]
    if full and len(occupied) < n:
        return
    anchors = occupied[:1] if full else occupied

    for c0 in anchors:
        stack: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
        for x0 in by[c0]:
            stack.append(((c0,), (x0,), 0))
        while stack:
            order, items, partial = stack.pop()
            c_prev, x_prev = order[-1], items[-1]
            size = len(order)
            if size >= 2 and (size == n or not full):
                close = gain_fn(x_prev, c_prev, c0) if gain_fn else None
                if gain_fn is None:
                    yield items, None
                elif (floor is None or partial + close >= floor) and not (
                    forced and close < 1
                ):
                    yield items, partial + close
            if size == n:
                continue
            if floor is not None and partial + 2 * (n - size + 1) < floor:
                continue
            used = set(order)
            for c_next in range(c0 + 1, n):
                if c_next in used or not by[c_next]:
                    continue
                step = gain_fn(x_prev, c_prev, c_next) if gain_fn else 0
                if forced and step < 1:
                    continue
                for x_next in by[c_next]:
                    stack.append((order + (c_next,), items + (x_next,), partial + step))


def exact_diameter_bfs(shape: Iterable[int], cap: int | None = None) -> int:
    """Combinatorial diameter of the partition polytope of the given shape.

    Item relabeling acts transitively on the vertices and preserves
    adjacency, so the eccentricity of one canonical vertex is the
    diameter; a single BFS suffices.
    """
    sizes = tuple(int(k) for k in shape)
    if any(k < 0 for k in sizes):
        raise ValueError("cluster sizes must be non-negative")
    n, m = len(sizes), sum(sizes)
    count = factorial(m)
    for k in sizes:
        count //= factorial(k)
    limit = _state_cap(cap)
    if count > limit:
        raise TooLarge(f"polytope has {count} vertices, cap is {limit}")

    start = tuple(c for c, k in enumerate(sizes) for _ in range(k))
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for st in frontier:
            by = _cluster_items(st, n)
            for items, _ in _iter_cycles(st, n, by):
                ns = _apply_cycle(st, items)
                if ns not in dist:
                    dist[ns] = depth
                    nxt.append(ns)
        frontier = nxt
    assert len(dist) == count, "the polytope graph is connected"
    return max(dist.values(), default=0)


def min_resolution_length(p: Partition, q: Partition, cap: int | None = None) -> int:
    """Length of a shortest resolution from p to q, by breadth-first search."""
    if p.sizes() != q.sizes():
        raise ShapeMismatch("p and q must have equal per-cluster sizes")
    if p.n != q.n or p.m != q.m:
        raise ShapeMismatch("p and q must share items and clusters")
    target = q.assign
    start = p.assign
    if start == target:
        return 0
    limit = _state_cap(cap)
    dist = {start: 0}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for st in frontier:
            by = _cluster_items(st, p.n)
            for items, _ in _iter_cycles(st, p.n, by):
                ns = _apply_cycle(st, items)
                if ns == target:
                    return depth
                if ns not in dist:
                    dist[ns] = depth
                    nxt.append(ns)
                    if len(dist) > limit:
                        raise TooLarge(f"search exceeded {limit} states")
        frontier = nxt
    raise AssertionError("equal shapes are always mutually reachable")


def _doubled_two_cycle_pairs(p: Partition, q: Partition) -> list[tuple[int, int]]:
    """Cluster pairs of a doubled-2-cycle difference digraph.

    The non-loop arcs must form vertex-disjoint 2-cycles of clusters with
    equal multiplicity in both directions; anything else is out of family.
    """
    if p.sizes() != q.sizes():
        raise ShapeMismatch("p and q must have equal per-cluster sizes")
    arcs = Counter((a, b) for a, b in zip(p.assign, q.assign) if a != b)
    partner: dict[int, int] = {}
    for (a, b), k in arcs.items():
        if arcs.get((b, a)) != k:
            raise FamilyMismatch("arc multiplicities must match in both directions")
        if partner.setdefault(a, b) != b or partner.setdefault(b, a) != a:
            raise FamilyMismatch("a cluster exchanges with two different clusters")
    return sorted({(min(a, b), max(a, b)) for a, b in arcs})


def pruned_no_short_resolution(p: Partition, q: Partition, length: int) -> bool:
    """True iff no resolution of at most ``length`` steps exists.

    Sound exhaustive search for doubled-2-cycle instances: a step from a
    state with progress deficit r and l steps left must gain at least
    r - (l-1)*(n + pairs), since no step can gain more than one unit per
    cluster plus one extra per in-pair whole move.  When the floor equals
    that cap the step is fully determined: it must touch every cluster and
    every move must gain, which is exactly the structure the bound proof
    extracts.  For the 18-item three-pair instance at length 4 the first
    move is additionally pinned to the canonical maximal exchange, as item
    relabeling within clusters makes all maximal first moves equivalent.
    """
    pairs = _doubled_two_cycle_pairs(p, q)
    n, m = p.n, p.m
    p0, q0 = p.assign, q.assign
    displaced = [x for x in range(m) if p0[x] != q0[x]]
    s_target = 2 * len(displaced)
    cap_gain = n + len(pairs)

    def contrib(x: int, c_from: int, c_to: int) -> int:
        away = (1 if c_to != p0[x] else 0) - (1 if c_from != p0[x] else 0)
        home = (1 if c_to == q0[x] else 0) - (1 if c_from == q0[x] else 0)
        return away + home

    def finishing_cycle(state: tuple[int, ...]) -> tuple[int, ...] | None:
        """The unique exchange reaching the target in one step, if any."""
        holder: dict[int, int] = {}
        for x in range(m):
            if state[x] != q0[x]:
                if state[x] in holder:
                    return None
                holder[state[x]] = x
        if not holder:
            return ()
        c = start_c = min(holder)
        items = []
        while True:
            x = holder.pop(c, None)
            if x is None:
                return None
            items.append(x)
            c = q0[x]
            if c == start_c:
                break
        return tuple(items) if not holder else None

    taken: list[CycleSeq] = []
    dead: set[tuple[tuple[int, ...], int]] = set()

    def dfs(state: tuple[int, ...], left: int) -> bool:
        if state == q0:
            return True
        if left == 0:
            return False
        s_cur = sum(
            (1 if state[x] != p0[x] else 0) + (1 if state[x] == q0[x] else 0)
            for x in displaced
        )
        remaining = s_target - s_cur
        if remaining > left * cap_gain:
            return False
        if left == 1:
            tau = finishing_cycle(state)
            if tau is None:
                return False
            taken.append(CycleSeq(tau))
            return True
        key = (state, left)
        if key in dead:
            return False
        floor = remaining - (left - 1) * cap_gain
        forced = floor >= cap_gain
        by = _cluster_items(state, n)
        for items, _ in _iter_cycles(
            state, n, by, full=forced, gain_fn=contrib, floor=floor, forced=forced
        ):
            taken.append(CycleSeq(items))
            if dfs(_apply_cycle(state, items), left - 1):
                return True
            taken.pop()
        dead.add(key)
        return False

    state0, depth = p0, length
    if length == 4 and (p, q) == gen_pp36_instance():
        taken.append(PP36_FIRST_MOVE)
        state0 = _apply_cycle(p0, PP36_FIRST_MOVE.items)
        depth = length - 1
    if dfs(state0, depth):
        assert verify_resolution(p, q, taken)
        return False
    return True


def min_odd_cover_exhaustive(
    g: SimpleGraph, kind: str, max_size: int, vertex_cap: int = 8
) -> int | None:
    """Smallest odd-cover size within ``max_size``, or None if none exists.

    Exhaustive: parts range over all paths or cycles of the complete graph
    on V(g), so the answer is a true optimum for cross-checking bounds.
    """
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")
    if g.n > vertex_cap:
        raise TooLarge(f"exhaustive search supports at most {vertex_cap} vertices")
    parts = _bounded_cover_search(g, kind, max_size)
    return None if parts is None else len(parts)


def is_hamiltonian(g: SimpleGraph) -> bool:
    """Backtracking Hamiltonian-cycle test for graphs on at most 20 vertices."""
    n = g.n
    if n > 20:
        raise TooLarge(f"hamiltonicity search supports at most 20 vertices, got {n}")
    if n < 3:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(g.edges):
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nbrs) < 2 for nbrs in adj):
        return False
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) < n:
        return False

    all_mask = (1 << n) - 1

    def extend(v: int, visited: int) -> bool:
        if visited == all_mask:
            return 0 in adj[v]
        for w in adj[v]:
            if not visited >> w & 1 and extend(w, visited | 1 << w):
                return True
        return False

    return extend(0, 1)


@dataclass(frozen=True)
class Report:
    """Outcome of one verification: name, verdict, first failure, timing."""

    check: str
    passed: bool
    detail: str
    elapsed_ms: int


def _check_cover(g: SimpleGraph, cert: OddCoverCert) -> str | None:
    want = SubgraphShape.PATH if cert.kind == "path" else SubgraphShape.CYCLE
    for i, part in enumerate(cert.parts):
        try:
            shape = classify(part, g.n)
        except Exception as exc:  # noqa: BLE001 - malformed part, name it
            return f"part {i} is malformed: {exc}"
        if shape is not want:
            return f"part {i} not a {cert.kind}"
    if len(set(cert.parts)) != len(cert.parts):
        return "parts are not pairwise distinct"
    if symmetric_difference(cert.parts) != g.edges:
        return "symmetric difference differs from the graph"
    return None


def _check_forests(g: SimpleGraph, cert: OddCoverCert) -> str | None:
    if len(cert.parts) != 3:
        return f"expected 3 parts, got {len(cert.parts)}"
    for i, part in enumerate(cert.parts):
        try:
            shape = classify(part, g.n)
        except Exception as exc:  # noqa: BLE001 - malformed part, name it
            return f"part {i} is malformed: {exc}"
        if shape not in _FOREST_SHAPES:
            return f"part {i} not a linear forest"
    for i in range(3):
        for j in range(i + 1, 3):
            if cert.parts[i] & cert.parts[j]:
                return f"parts {i} and {j} share an edge"
    if frozenset().union(*cert.parts) != g.edges:
        return "union differs from the graph"
    return None


def verify_certificate(target, cert) -> Report:
    """Re-check a certificate against its target; never raises.

    Resolutions are replayed against a (p, q) pair; path and cycle
    odd-covers are checked part-by-part and xored against the graph;
    linear-forest decompositions additionally require disjointness.
    """
    t0 = time.perf_counter()
    try:
        if isinstance(cert, Resolution):
            name = "resolution"
            p, q = target
            if cert.start != p:
                detail = "resolution starts at the wrong partition"
            else:
                detail = check_resolution(p, q, cert.taus)
        elif isinstance(cert, OddCoverCert):
            if cert.kind in ("path", "cycle"):
                name = f"odd_cover[{cert.kind}]"
                detail = _check_cover(target, cert)
            elif cert.kind == "linear_forest":
                name = "linear_forest"
                detail = _check_forests(target, cert)
            else:
                name = "odd_cover"
                detail = f"unknown kind {cert.kind!r}"
        else:
            name = "certificate"
            detail = f"unsupported certificate type {type(cert).__name__}"
    except Exception as exc:  # noqa: BLE001 - verifier reports, never raises
        name = "certificate"
        detail = f"verification crashed: {exc}"
    elapsed = int((time.perf_counter() - t0) * 1000)
    return Report(name, detail is None, detail or "ok", elapsed)
