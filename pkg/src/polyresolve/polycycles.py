"""Polycycle decompositions of Eulerian graphs and digraphs.

An Eulerian digraph whose maximum out-degree is D splits into D arc-disjoint
parts in which every touched vertex has in- and out-degree exactly 1, i.e.
every part is a disjoint union of directed cycles (a directed polycycle).
When at most one vertex has out-degree above a threshold t, the last D - t
parts can moreover be forced to be single cycles through that vertex.

The undirected variant orients the graph first.  Applied to the cluster
difference digraph of two equal-shape partitions, the same decomposition
yields a factorization of the move from p to q into balanced permutations
and p-cycles with pairwise disjoint supports.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .errors import NotPolycycle, ShapeMismatch, ThresholdViolated
from .graphs import (
    Digraph,
    Edge,
    SimpleGraph,
    SubgraphShape,
    classify,
    edge,
    edge_components,
    eulerian_orientation,
    symmetric_difference,
)
from .perms import (
    CycleSeq,
    Partition,
    Permutation,
    cdg,
    cycle_is_p_cycle,
    is_p_balanced,
)

__all__ = [
    "PolycycleDecomposition",
    "directed_polycycle_decomposition",
    "undirected_polycycle_decomposition",
    "balanced_permutation_factorization",
    "polycycle_odd_cover",
]


@dataclass(frozen=True)
class PolycycleDecomposition:
    """Pairwise disjoint polycycle parts covering all non-loop edges.

    Parts hold arc ids (directed host) or canonical edges (undirected host).
    The trailing ``cycle_suffix_len`` parts are single cycles; a part in the
    suffix may be empty when it was paid for by a loop at the high-degree
    vertex, which stands in for a degenerate cycle.
    """

    parts: tuple[frozenset, ...]
    cycle_suffix_len: int

    def __len__(self) -> int:
        return len(self.parts)


def _hopcroft_karp(n_left: int, n_right: int, adj: list[list[int]]) -> list[int]:
    """Maximum bipartite matching; returns the partner of each left vertex (-1 if none)."""
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + n_right + 1

    def try_augment(u: int) -> bool:
        for w in adj[u]:
            u2 = match_r[w]
            if u2 == -1 or (dist[u2] == dist[u] + 1 and try_augment(u2)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = inf
        return False

    while True:
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                u2 = match_r[w]
                if u2 == -1:
                    reachable_free = True
                elif dist[u2] == inf:
                    dist[u2] = dist[u] + 1
                    queue.append(u2)
        if not reachable_free:
            return match_l
        for u in range(n_left):
            if match_l[u] == -1:
                try_augment(u)


def _extract_cycle_through(g: Digraph, v: int, out_arcs: list[list[int]], used: list[bool]) -> frozenset[int]:
    """Remove and return a simple directed cycle through v, or consume one loop at v.

    Walks unused non-loop arcs (lowest arc id first) until the first return
    to v; repeated intermediate vertices are shortcut and their arcs returned
    to the pool.  If only loops remain at v, one loop is consumed and the
    empty set returned (a degenerate cycle).
    """
    first = None
    loop = None
    for a in out_arcs[v]:
        if used[a]:
            continue
        if g.heads[a] == v:
            if loop is None:
                loop = a
        else:
            first = a
            break
    if first is None:
        assert loop is not None, "extraction requires an unused out-arc at v"
        used[loop] = True
        return frozenset()

    walk = [first]
    used[first] = True
    cur = g.heads[first]
    while cur != v:
        step = None
        for a in out_arcs[cur]:
            if not used[a] and g.heads[a] != cur:
                step = a
                break
        assert step is not None, "balanced digraph walk can only halt at its start"
        used[step] = True
        walk.append(step)
        cur = g.heads[step]

    # Shortcut revisited intermediate vertices so the cycle is simple.
    verts = [v]
    pos = {v: 0}
    reduced: list[int] = []
    for a in walk:
        reduced.append(a)
        h = g.heads[a]
        if h == v:
            break
        if h in pos:
            j = pos[h]
            for b in reduced[j:]:
                used[b] = False
            for w in verts[j + 1 :]:
                del pos[w]
            del reduced[j:]
            del verts[j + 1 :]
        else:
            pos[h] = len(reduced)
            verts.append(h)
    assert len(reduced) >= 2
    return frozenset(reduced)


def _assert_directed_part(g: Digraph, arcs: frozenset[int], single_cycle: bool) -> None:
    indeg: Counter[int] = Counter()
    outdeg: Counter[int] = Counter()
    for a in arcs:
        outdeg[g.tails[a]] += 1
        indeg[g.heads[a]] += 1
    touched = set(indeg) | set(outdeg)
    assert all(indeg[u] == 1 and outdeg[u] == 1 for u in touched)
    if single_cycle and arcs:
        succ = {g.tails[a]: a for a in arcs}
        a = next(iter(arcs))
        seen = 1
        b = succ[g.heads[a]]
        while b != a:
            seen += 1
            b = succ[g.heads[b]]
        assert seen == len(arcs), "suffix part must be one cycle"


def directed_polycycle_decomposition(g: Digraph, t: int) -> PolycycleDecomposition:
    """Split an Eulerian digraph into max-out-degree many directed polycycles.

    Requires in-degree = out-degree everywhere and, when t < D (the maximum
    out-degree), that at most one vertex has out-degree above t.  Returns D
    parts whose union is the non-loop arcs of g; the last D - t parts are
    single cycles through the high-degree vertex.
    """
    if not g.is_eulerian():
        from .errors import NotEulerian

        raise NotEulerian("every vertex needs equal in- and out-degree")
    out = g.out_degrees()
    delta = max(out, default=0)
    if not 0 <= t <= delta:
        raise ValueError(f"threshold must lie in [0, {delta}], got {t}")

    used = [False] * g.m
    out_arcs: list[list[int]] = [[] for _ in range(g.n)]
    for a in range(g.m):
        out_arcs[g.tails[a]].append(a)

    cycles: list[frozenset[int]] = []
    if t < delta:
        high = [u for u in range(g.n) if out[u] > t]
        if len(high) > 1:
            raise ThresholdViolated(
                f"{len(high)} vertices have out-degree above {t}; at most one allowed"
            )
        v = high[0]
        for _ in range(delta - t):
            cycles.append(_extract_cycle_through(g, v, out_arcs, used))

    remaining = [a for a in range(g.m) if not used[a]]
    res_out = [0] * g.n
    res_in = [0] * g.n
    for a in remaining:
        res_out[g.tails[a]] += 1
        res_in[g.heads[a]] += 1
    assert res_out == res_in, "cycle removal preserves balance"
    assert max(res_out, default=0) <= t or t == delta

    # Pad every vertex to out-degree t with virtual loops, then peel t
    # perfect matchings of the tail/head bipartite multigraph.
    pools: dict[tuple[int, int], deque[int]] = {}
    for a in remaining:
        pools.setdefault((g.tails[a], g.heads[a]), deque()).append(a)
    next_virtual = g.m
    for u in range(g.n):
        for _ in range(t - res_out[u]):
            pools.setdefault((u, u), deque()).append(next_virtual)
            next_virtual += 1

    classes: list[frozenset[int]] = []
    for _ in range(t):
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for (u, w), pool in sorted(pools.items()):
            if pool:
                adj[u].append(w)
        match_l = _hopcroft_karp(g.n, g.n, adj)
        assert all(w != -1 for w in match_l), "regular bipartite graph has a perfect matching"
        cls = []
        for u in range(g.n):
            w = match_l[u]
            a = pools[(u, w)].popleft()
            if a < g.m and u != w:
                cls.append(a)
        classes.append(frozenset(cls))
    assert all(not pool for pool in pools.values())

    parts = tuple(classes) + tuple(cycles)
    nonloop = {a for a in range(g.m) if g.tails[a] != g.heads[a]}
    assert sum(len(part) for part in parts) == len(nonloop)
    assert frozenset().union(*parts) == nonloop if parts else not nonloop
    for i, part in enumerate(parts):
        _assert_directed_part(g, part, single_cycle=i >= len(classes))
    return PolycycleDecomposition(parts, delta - t)


def undirected_polycycle_decomposition(g: SimpleGraph, t: int) -> PolycycleDecomposition:
    """Split an Eulerian graph of maximum degree D into D/2 polycycles.

    Requires, when t < D/2, that at most one vertex has degree above 2t.
    The last D/2 - t parts are single cycles through that vertex.
    """
    oriented = eulerian_orientation(g)
    directed = directed_polycycle_decomposition(oriented, t)
    edge_list = sorted(g.edges)
    parts = tuple(frozenset(edge_list[a] for a in part) for part in directed.parts)

    for i, part in enumerate(parts):
        shape = classify(part, g.n)
        if i >= len(parts) - directed.cycle_suffix_len:
            assert shape is SubgraphShape.CYCLE
        else:
            assert shape in (SubgraphShape.EMPTY, SubgraphShape.CYCLE, SubgraphShape.POLYCYCLE)
    assert symmetric_difference(parts) == g.edges or not parts
    if parts and directed.cycle_suffix_len == 0:
        deg = g.degree_vector()
        for u in range(g.n):
            if deg[u] == 2 * t:
                assert all(any(u in e for e in part) for part in parts)
    return PolycycleDecomposition(parts, directed.cycle_suffix_len)


def balanced_permutation_factorization(
    p: Partition, q: Partition
) -> tuple[list[CycleSeq], list[Permutation]]:
    """Factor the move from p to q into p-cycles and p-balanced permutations.

    Returns (sigmas, pis) with pairwise disjoint supports: at most k1 - k2
    p-cycles and at most k2 p-balanced permutations, where k1 >= k2 are the
    two largest cluster sizes.  Applying all factors to p (in any order,
    since they commute) yields q.
    """
    if p.sizes() != q.sizes():
        raise ShapeMismatch("p and q must have equal per-cluster sizes")
    if p == q:
        return [], []
    shape = p.shape()
    k2 = shape[1] if len(shape) > 1 else 0
    d = cdg(p, q)
    decomp = directed_polycycle_decomposition(d, t=k2)

    n_matching = len(decomp.parts) - decomp.cycle_suffix_len
    pis: list[Permutation] = []
    for part in decomp.parts[:n_matching]:
        if not part:
            continue
        succ = {d.tails[a]: a for a in part}
        image = list(range(p.m))
        for a in part:
            image[a] = succ[d.heads[a]]
        pi = Permutation(tuple(image))
        assert is_p_balanced(pi, p)
        pis.append(pi)

    sigmas: list[CycleSeq] = []
    for part in decomp.parts[n_matching:]:
        if not part:
            continue
        succ = {d.tails[a]: a for a in part}
        start = min(part)
        seq = [start]
        a = succ[d.heads[start]]
        while a != start:
            seq.append(a)
            a = succ[d.heads[a]]
        sigma = CycleSeq(tuple(seq))
        assert cycle_is_p_cycle(sigma, p)
        sigmas.append(sigma)

    supports = [frozenset(pi.support()) for pi in pis] + [
        frozenset(s.items) for s in sigmas
    ]
    assert sum(len(s) for s in supports) == len(frozenset().union(*supports))
    replay = p
    for sigma in reversed(sigmas):
        replay = replay.apply(sigma)
    for pi in reversed(pis):
        replay = replay.apply(pi)
    assert replay == q
    return sigmas, pis


def polycycle_odd_cover(h, kind: str) -> list[frozenset[Edge]]:
    """Cover a polycycle with at most two paths or at most two cycles.

    Every edge of h lies in an odd number of returned parts and every other
    pair in an even number (here: the parts xor to h exactly).  A single
    cycle is its own one-part cycle cover.
    """
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")
    edges = frozenset(edge(u, v) for u, v in h)
    if not edges:
        return []
    n = max(max(e) for e in edges) + 1
    shape = classify(edges, n)
    if shape not in (SubgraphShape.CYCLE, SubgraphShape.POLYCYCLE):
        raise NotPolycycle(f"input classifies as {shape.value}, not a polycycle")

    comps = edge_components(edges)
    if kind == "cycle" and len(comps) == 1:
        return [edges]

    chosen = [min(c) for c in comps]
    connectors = [edge(chosen[i][1], chosen[i + 1][0]) for i in range(len(comps) - 1)]
    p1: set[Edge] = set(connectors)
    for comp, e in zip(comps, chosen):
        p1 |= comp - {e}
    p2: set[Edge] = set(chosen) | set(connectors)
    if kind == "cycle":
        closing = edge(chosen[-1][1], chosen[0][0])
        p1.add(closing)
        p2.add(closing)
        want = SubgraphShape.CYCLE
    else:
        want = SubgraphShape.PATH

    parts = [frozenset(p1), frozenset(p2)]
    span = max(max(max(e) for e in part) for part in parts) + 1
    assert all(classify(part, span) is want for part in parts)
    assert symmetric_difference(parts) == edges
    return parts
