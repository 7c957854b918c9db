"""Path and cycle odd-covers of graphs via linear-forest surgery.

An odd-cover of G is a list of subgraphs of the complete graph on V(G)
whose symmetric difference is exactly G.  Two edge-disjoint polycycles
split into three linear forests once a transversal matching pair is
fixed; the parity of |V(M1) & V(M2)| controls how the forest endpoints
pair up, and greedy endpoint joins then merge each forest into a single
path (odd parity) or close all three into cycles (even parity, given a
straddling component in each forest).  Stacking these three-for-two
covers over a polycycle decomposition covers any Eulerian graph with
ceil(3*Delta/4) paths or d1/2 + ceil(d2/4) cycles (d1 >= d2 the top two
degrees), and a general graph reduces to the Eulerian case by one
matching on its odd-degree vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CrossingPairMissing,
    NoCommonVertex,
    NotEdgeDisjoint,
    NotEulerian,
    NotLinearForest,
    NotPolycycle,
    NotTransversal,
    PreconditionViolated,
    TooLarge,
)
from .graphs import (
    Edge,
    SimpleGraph,
    SubgraphShape,
    classify,
    cycle_order,
    degrees,
    edge,
    edge_components,
    symmetric_difference,
    vertices_of,
)
from .polycycles import polycycle_odd_cover, undirected_polycycle_decomposition

__all__ = [
    "TransversalPair",
    "ForestTriple",
    "OddCoverCert",
    "forest_stats",
    "linear_forests_from_transversal",
    "flexible_exchange",
    "transversal_odd_intersection",
    "transversal_even_intersection",
    "path_odd_cover_delta4",
    "cycle_odd_cover_delta4",
    "odd_cover_eulerian",
    "path_odd_cover_general",
    "linear_forest_decomposition",
]

_FOREST_SHAPES = (SubgraphShape.EMPTY, SubgraphShape.PATH, SubgraphShape.LINEAR_FOREST)


@dataclass(frozen=True)
class TransversalPair:
    """One matching edge per component of each of two polycycles."""

    m1: frozenset[Edge]
    m2: frozenset[Edge]


@dataclass(frozen=True)
class ForestTriple:
    """Three linear forests with endpoint bookkeeping.

    ``rij`` counts vertices that are path endpoints in both forest i and
    forest j; ``ti`` counts components of forest i whose two endpoints
    fall into the two different shared-endpoint sets.  All six counts are
    congruent to ``parity`` mod 2.
    """

    f1: frozenset[Edge]
    f2: frozenset[Edge]
    f3: frozenset[Edge]
    r12: int
    r13: int
    r23: int
    t1: int
    t2: int
    t3: int
    parity: int

    @property
    def forests(self) -> tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]:
        return (self.f1, self.f2, self.f3)


@dataclass(frozen=True)
class OddCoverCert:
    """Subgraph parts of one kind whose xor is the covered graph."""

    kind: str
    parts: tuple[frozenset[Edge], ...]

    def __len__(self) -> int:
        return len(self.parts)


def _canon(edges: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in edges)


def _span(*edge_sets: Iterable[Edge]) -> int:
    top = max((max(e) for es in edge_sets for e in es), default=0)
    return top + 1


def _ends(edges: Iterable[Edge]) -> set[int]:
    """Degree-1 vertices of an edge set (path endpoints in a linear forest)."""
    deg: Counter[int] = Counter()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return {v for v, d in deg.items() if d == 1}


def _neighbors(comp: Iterable[Edge], u: int) -> list[int]:
    return sorted(w for e in comp for w in e if u in e and w != u)


def _component_of(edges: frozenset[Edge], v: int) -> frozenset[Edge]:
    for comp in edge_components(edges):
        if v in vertices_of(comp):
            return comp
    raise ValueError(f"vertex {v} touches no edge")


def _analyze(fs: tuple[frozenset[Edge], ...]):
    """R-sets, straddling components, and parity of a linear-forest triple."""
    span = _span(*fs)
    for f in fs:
        if classify(f, span) not in _FOREST_SHAPES:
            raise NotLinearForest("every part must be a disjoint union of paths")
    ends = [_ends(f) for f in fs]
    for v in ends[0] | ends[1] | ends[2]:
        hits = sum(v in e for e in ends)
        if hits != 2:
            raise PreconditionViolated(
                f"endpoint {v} lies in {hits} end sets; the union is not Eulerian"
            )
    r_sets = {
        (0, 1): ends[0] & ends[1],
        (0, 2): ends[0] & ends[2],
        (1, 2): ends[1] & ends[2],
    }
    straddlers: dict[int, list[frozenset[Edge]]] = {}
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        a = r_sets[(min(i, j), max(i, j))]
        b = r_sets[(min(i, k), max(i, k))]
        straddlers[i] = [
            comp
            for comp in edge_components(fs[i])
            if len(_ends(comp) & a) == 1 and len(_ends(comp) & b) == 1
        ]
    parity = len(r_sets[(0, 1)]) % 2
    counts = [len(r_sets[key]) for key in ((0, 1), (0, 2), (1, 2))]
    counts += [len(straddlers[i]) for i in range(3)]
    assert all(c % 2 == parity for c in counts), "endpoint counts must share parity"
    return r_sets, straddlers, parity


def forest_stats(f1: Iterable[tuple[int, int]], f2: Iterable[tuple[int, int]],
                 f3: Iterable[tuple[int, int]]) -> ForestTriple:
    """Endpoint statistics of three linear forests whose union is Eulerian.

    Counts shared endpoints r12/r13/r23 and straddling components
    t1/t2/t3, all congruent mod 2 to the returned parity bit.
    """
    fs = tuple(_canon(f) for f in (f1, f2, f3))
    r_sets, straddlers, parity = _analyze(fs)
    return ForestTriple(
        *fs,
        r12=len(r_sets[(0, 1)]),
        r13=len(r_sets[(0, 2)]),
        r23=len(r_sets[(1, 2)]),
        t1=len(straddlers[0]),
        t2=len(straddlers[1]),
        t3=len(straddlers[2]),
        parity=parity,
    )


def _check_polycycle(h: frozenset[Edge], span: int, name: str) -> None:
    if classify(h, span) not in (SubgraphShape.EMPTY, SubgraphShape.CYCLE, SubgraphShape.POLYCYCLE):
        raise NotPolycycle(f"{name} is not a disjoint union of cycles")


def _check_transversal(m: frozenset[Edge], h: frozenset[Edge], name: str) -> None:
    if not m <= h:
        raise NotTransversal(f"{name} has edges outside its polycycle")
    comps = edge_components(h)
    for comp in comps:
        if len(m & comp) != 1:
            raise NotTransversal(f"{name} must pick exactly one edge per component")
    if len(m) != len(comps):
        raise NotTransversal(f"{name} has stray edges")


def _transversal(h: frozenset[Edge], avoid: tuple[int, ...] = ()) -> set[Edge]:
    """Smallest transversal edge per component, skipping given vertices."""
    out: set[Edge] = set()
    for comp in edge_components(h):
        cands = sorted(e for e in comp if not set(e) & set(avoid))
        assert cands, "a cycle always has an edge missing the avoided vertices"
        out.add(cands[0])
    return out


def linear_forests_from_transversal(
    h1: Iterable[tuple[int, int]], h2: Iterable[tuple[int, int]], tp: TransversalPair
) -> ForestTriple:
    """Split two edge-disjoint polycycles into three linear forests.

    The forests are (h1 - m1) + m', m1 + (m2 - m'), and h2 - m2, where m'
    holds the smallest m2-edge of every cycle component of m1 + m2.  Their
    endpoint parity equals |V(m1) & V(m2)| mod 2.
    """
    h1 = _canon(h1)
    h2 = _canon(h2)
    if h1 & h2:
        raise NotEdgeDisjoint("the two polycycles share an edge")
    span = _span(h1, h2, tp.m1, tp.m2)
    _check_polycycle(h1, span, "h1")
    _check_polycycle(h2, span, "h2")
    if not h1 and not h2:
        if tp.m1 or tp.m2:
            raise NotTransversal("transversal of an empty polycycle must be empty")
        return forest_stats((), (), ())
    if not h1 or not h2:
        raise NotTransversal("exactly one side is empty; no transversal pair exists")
    m1 = _canon(tp.m1)
    m2 = _canon(tp.m2)
    _check_transversal(m1, h1, "m1")
    _check_transversal(m2, h2, "m2")

    m_prime: set[Edge] = set()
    for comp in edge_components(m1 | m2):
        shape = classify(comp, span)
        assert shape in (SubgraphShape.PATH, SubgraphShape.CYCLE)
        if shape is SubgraphShape.CYCLE:
            assert len(comp) % 2 == 0, "matching-union cycles alternate sides"
            m_prime.add(min(comp & m2))

    f1 = (h1 - m1) | m_prime
    f2 = m1 | (m2 - m_prime)
    f3 = h2 - m2
    assert not (f1 & f2) and not (f1 & f3) and not (f2 & f3)
    assert symmetric_difference([f1, f2, f3]) == h1 | h2

    v1, v2 = vertices_of(m1), vertices_of(m2)
    assert _ends(f1) == v1 ^ vertices_of(m2 & f1)
    assert _ends(f2) == v1 ^ vertices_of(m2 & f2)
    assert _ends(f3) == v2
    triple = forest_stats(f1, f2, f3)
    assert triple.parity == len(v1 & v2) % 2
    return triple


def flexible_exchange(
    c: Iterable[tuple[int, int]], v: Iterable[int], x: int, z: int
) -> tuple[frozenset[int], Edge, Edge]:
    """Adjust a vertex set at one vertex so a cycle has edges of both parities.

    Returns (chosen_v, e0, e1) with chosen_v equal to v or v + {z} - {x},
    |e0 & chosen_v| even, and |e1 & chosen_v| odd; both edges lie on c.
    """
    cedges = _canon(c)
    vset = frozenset(v)
    span = _span(cedges)
    if classify(cedges, span) is not SubgraphShape.CYCLE:
        raise PreconditionViolated("c must be a single cycle")
    verts = vertices_of(cedges)
    if x not in vset or x not in verts or z in vset or x == z:
        raise PreconditionViolated("need x in v and on c, z outside v, x != z")

    evens = sorted(e for e in cedges if len(set(e) & vset) % 2 == 0)
    odds = sorted(e for e in cedges if len(set(e) & vset) % 2 == 1)
    if evens and odds:
        return vset, evens[0], odds[0]

    chosen = (vset - {x}) | {z}
    if not odds:
        # Every edge is even, so the whole cycle sits inside v; dropping x
        # makes its two incident edges odd while the rest stay even.
        assert verts <= vset
        e0 = min(e for e in cedges if x not in e)
        e1 = min(e for e in cedges if x in e)
    else:
        # Every edge is odd: the cycle alternates in/out of v, with even
        # length.  Dropping x frees one edge at x and keeps one odd edge
        # at the next in-vertex along the cycle.
        order = cycle_order(cedges, start=x)
        assert len(order) % 2 == 0, "an all-odd cycle alternates, hence is even"
        ins, outs = order[0::2], order[1::2]
        assert all(u in vset for u in ins) and all(u not in vset for u in outs)
        y = outs[-1] if outs[-1] != z else outs[0]
        y2 = outs[0] if outs[0] != z else outs[1]
        e0 = edge(order[0], y)
        e1 = edge(order[2], y2)
    assert e0 in cedges and e1 in cedges
    assert len(set(e0) & chosen) % 2 == 0
    assert len(set(e1) & chosen) % 2 == 1
    return chosen, e0, e1


def transversal_odd_intersection(
    h1: Iterable[tuple[int, int]], h2: Iterable[tuple[int, int]]
) -> TransversalPair:
    """Transversal pair with oddly many shared matched vertices.

    Anchors both matchings at a shared vertex: the h1-side picks one of
    the two cycle edges following it (whichever makes the h2-side cycle
    flexible), and the h2-side closes with the flexible edge of the
    right parity.
    """
    h1 = _canon(h1)
    h2 = _canon(h2)
    if h1 & h2:
        raise NotEdgeDisjoint("the two polycycles share an edge")
    span = _span(h1, h2)
    _check_polycycle(h1, span, "h1")
    _check_polycycle(h2, span, "h2")
    shared = vertices_of(h1) & vertices_of(h2)
    if not shared:
        raise NoCommonVertex("the polycycles have no vertex in common")

    x1 = min(shared)
    c = _component_of(h1, x1)
    d = _component_of(h2, x1)
    order = cycle_order(c, start=x1)
    x2, x3 = order[1], order[2]

    m1_rest = _transversal(h1 - c)
    base = vertices_of(m1_rest) | {x1, x2}
    chosen, e0, e1 = flexible_exchange(d, base, x1, x3)
    e = edge(x1, x2) if chosen == base else edge(x2, x3)
    m1 = frozenset(m1_rest | {e})
    assert vertices_of(m1) == chosen

    m2_rest = _transversal(h2 - d)
    even_so_far = len(vertices_of(m1) & vertices_of(m2_rest)) % 2 == 0
    m2 = frozenset(m2_rest | ({e1} if even_so_far else {e0}))

    _check_transversal(m1, h1, "m1")
    _check_transversal(m2, h2, "m2")
    assert len(vertices_of(m1) & vertices_of(m2)) % 2 == 1
    return TransversalPair(m1, m2)


def _even_case_direct(
    side1: list[frozenset[Edge]],
    side2: list[frozenset[Edge]],
    a: frozenset[Edge],
    b: frozenset[Edge],
    ap: frozenset[Edge],
    bp: frozenset[Edge],
):
    """Try the generic overlap construction for one oriented quadruple.

    Looks for an edge u-v1 on a with u on b and v1 off bp, builds the
    side-1 matching so bp is flexible with respect to it while avoiding a
    b-neighbor v2 of u, and closes the side-2 matching at even parity.
    Returns (m1, m2, u, v1, v2) or None if no such edge works here.
    """
    vb, vbp, vap = vertices_of(b), vertices_of(bp), vertices_of(ap)
    for e in sorted(a):
        for u, v1 in (e, (e[1], e[0])):
            if u not in vb or v1 in vbp:
                continue
            nbrs = _neighbors(b, u)
            outside = [w for w in nbrs if w not in vap]
            if outside:
                v2 = outside[0]
                x = min(vap & vbp)
                walk = cycle_order(ap, start=x)
                y, z = walk[1], walk[2]
                m1_rest: set[Edge] = {edge(u, v1)}
                for comp in side1:
                    if comp not in (a, ap):
                        m1_rest |= _transversal(comp, avoid=(v2,))
                base = vertices_of(m1_rest) | {x, y}
                chosen, e0, e1 = flexible_exchange(bp, base, x, z)
                m1 = frozenset(m1_rest | {edge(x, y) if chosen == base else edge(y, z)})
                assert vertices_of(m1) == chosen
            else:
                # Both b-neighbors of u land on ap; usable only when every
                # other side-1 component misses bp, making bp touch the
                # side-1 matching in exactly one vertex.
                if any(
                    comp not in (a, ap) and vertices_of(comp) & vbp
                    for comp in side1
                ):
                    continue
                boundary = sorted(
                    e2 for e2 in ap if len(set(e2) & vbp) == 1
                )
                assert boundary, "ap meets bp but also has vertices outside it"
                e2 = boundary[0]
                (x,) = set(e2) & vbp
                (y,) = set(e2) - {x}
                v2 = min(w for w in nbrs if w != y)
                m1_set: set[Edge] = {edge(u, v1), e2}
                for comp in side1:
                    if comp not in (a, ap):
                        m1_set |= _transversal(comp, avoid=(v2,))
                m1 = frozenset(m1_set)
                assert vertices_of(m1) & vbp == {x}
                e1 = min(e3 for e3 in bp if x in e3)
                e0 = min(e3 for e3 in bp if x not in e3)
            assert v2 not in vertices_of(m1)

            m2_rest: set[Edge] = {edge(u, v2)}
            for comp in side2:
                if comp not in (b, bp):
                    m2_rest |= _transversal(comp, avoid=(v1,))
            assert v1 not in vertices_of(m2_rest)
            even_so_far = len(vertices_of(m1) & vertices_of(m2_rest)) % 2 == 0
            m2 = frozenset(m2_rest | ({e0} if even_so_far else {e1}))
            assert v1 not in vertices_of(m2)
            return m1, m2, u, v1, v2
    return None


def _even_case_rigid(
    h1: frozenset[Edge],
    h2: frozenset[Edge],
    comps1: list[frozenset[Edge]],
    comps2: list[frozenset[Edge]],
    c1: frozenset[Edge],
    c2: frozenset[Edge],
    c1p: frozenset[Edge],
    c2p: frozenset[Edge],
):
    """Handle the fully interlocked overlap: four equal even cycles whose
    vertices alternate pairwise.  Validates the structure and pins two
    crossing matched edges per side so the intersection is {u1, x1}."""

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise AssertionError(f"interlocked-overlap validation failed: {msg}")

    v1s, v2s = vertices_of(c1), vertices_of(c2)
    v1ps, v2ps = vertices_of(c1p), vertices_of(c2p)
    lengths = {len(c1), len(c2), len(c1p), len(c2p)}
    need(lengths == {len(c1)} and len(c1) % 2 == 0, "cycles must share one even length")

    def check_alt(comp: frozenset[Edge], side_a: set[int], side_b: set[int]) -> None:
        walk = cycle_order(comp)
        marks = []
        for w in walk:
            if w in side_a and w not in side_b:
                marks.append(0)
            elif w in side_b and w not in side_a:
                marks.append(1)
            else:
                need(False, "cycle vertex off both opposite components")
        need(
            all(marks[i] != marks[(i + 1) % len(marks)] for i in range(len(marks))),
            "cycle must alternate between the opposite components",
        )

    check_alt(c1, v2s, v2ps)
    check_alt(c1p, v2s, v2ps)
    check_alt(c2, v1s, v1ps)
    check_alt(c2p, v1s, v1ps)
    need(vertices_of(h1) & vertices_of(h2) == v1s | v1ps, "no overlap outside the four cycles")
    need(v1s | v1ps == v2s | v2ps, "both sides must cover the same overlap")

    u1 = min(v1s & v2s)
    c1_nbrs = _neighbors(c1, u1)
    need(set(c1_nbrs) <= v2ps, "neighbors on c1 must lie on c2'")
    v1 = c1_nbrs[0]
    w1, w = _neighbors(c2, u1)
    need({w1, w} <= v1ps, "neighbors on c2 must lie on c1'")
    x1 = _neighbors(c1p, w1)[0]
    need(x1 in v2ps, "neighbor on c1' must lie on c2'")
    v = min(ww for ww in _neighbors(c2p, x1) if ww != v1)

    m1 = {edge(u1, v1), edge(w1, x1)}
    for comp in comps1:
        if comp not in (c1, c1p):
            m1.add(min(comp))
    m2 = {edge(u1, w), edge(v, x1)}
    for comp in comps2:
        if comp not in (c2, c2p):
            m2.add(min(comp))
    need(vertices_of(m1) & vertices_of(m2) == {u1, x1}, "intersection must be the two anchors")
    return frozenset(m1), frozenset(m2), u1, v1, w


def transversal_even_intersection(
    h1: Iterable[tuple[int, int]],
    h2: Iterable[tuple[int, int]],
    crossing: tuple[tuple[Iterable[tuple[int, int]], Iterable[tuple[int, int]]],
                    tuple[Iterable[tuple[int, int]], Iterable[tuple[int, int]]]],
) -> tuple[TransversalPair, tuple[int, int, int]]:
    """Transversal pair with even intersection plus a crossing witness.

    ``crossing`` names two component pairs (c1, c2) and (c1', c2') with
    c1 != c1' intersecting c2 != c2' respectively.  Returns the pair and
    a witness (u, v1, v2) with u-v1 in m1, u-v2 in m2, v1 off V(m2), and
    v2 off V(m1); the witness forces straddling components downstream.
    """
    h1 = _canon(h1)
    h2 = _canon(h2)
    if h1 & h2:
        raise NotEdgeDisjoint("the two polycycles share an edge")
    span = _span(h1, h2)
    _check_polycycle(h1, span, "h1")
    _check_polycycle(h2, span, "h2")
    comps1 = edge_components(h1)
    comps2 = edge_components(h2)

    try:
        (c1_raw, c2_raw), (c1p_raw, c2p_raw) = crossing
        c1, c2, c1p, c2p = (_canon(c) for c in (c1_raw, c2_raw, c1p_raw, c2p_raw))
    except (TypeError, ValueError) as exc:
        raise CrossingPairMissing("crossing must hold two component pairs") from exc
    if c1 not in comps1 or c1p not in comps1 or c2 not in comps2 or c2p not in comps2:
        raise CrossingPairMissing("crossing entries must be components of the polycycles")
    if c1 == c1p or c2 == c2p:
        raise CrossingPairMissing("crossing components must be distinct on each side")
    if not vertices_of(c1) & vertices_of(c2) or not vertices_of(c1p) & vertices_of(c2p):
        raise CrossingPairMissing("named component pairs must intersect")

    for swapped in (False, True):
        side1, side2 = (comps2, comps1) if swapped else (comps1, comps2)
        host1 = h2 if swapped else h1
        for a in side1:
            for b in side2:
                if not vertices_of(a) & vertices_of(b):
                    continue
                for ap in side1:
                    if ap == a:
                        continue
                    for bp in side2:
                        if bp == b or not vertices_of(ap) & vertices_of(bp):
                            continue
                        found = _even_case_direct(side1, side2, a, b, ap, bp)
                        if found is None:
                            continue
                        ma, mb, u, v1, v2 = found
                        _check_transversal(ma, host1, "m1")
                        if swapped:
                            tp = TransversalPair(mb, ma)
                            witness = (u, v2, v1)
                        else:
                            tp = TransversalPair(ma, mb)
                            witness = (u, v1, v2)
                        _finish_even(tp, witness, h1, h2)
                        return tp, witness

    m1, m2, u, v1, v2 = _even_case_rigid(h1, h2, comps1, comps2, c1, c2, c1p, c2p)
    tp = TransversalPair(m1, m2)
    witness = (u, v1, v2)
    _finish_even(tp, witness, h1, h2)
    return tp, witness


def _finish_even(
    tp: TransversalPair, witness: tuple[int, int, int], h1: frozenset[Edge], h2: frozenset[Edge]
) -> None:
    u, v1, v2 = witness
    _check_transversal(tp.m1, h1, "m1")
    _check_transversal(tp.m2, h2, "m2")
    assert len(vertices_of(tp.m1) & vertices_of(tp.m2)) % 2 == 0
    assert edge(u, v1) in tp.m1 and edge(u, v2) in tp.m2
    assert v1 not in vertices_of(tp.m2) and v2 not in vertices_of(tp.m1)


def _join_step(
    fs: list[set[Edge]],
    i: int,
    j: int,
    r_sets: dict[tuple[int, int], set[int]],
    straddlers: dict[int, list[frozenset[Edge]]],
    for_cycles: bool,
) -> Edge:
    """Pick the proof's join edge u-v inside the shared endpoint set of
    forests i and j, chosen so straddling components survive."""
    k = 3 - i - j
    rij = r_sets[(i, j)]
    rik = r_sets[(min(i, k), max(i, k))]
    if not for_cycles:
        u = None
        for cand in sorted(rij):
            other = (_ends(_component_of(frozenset(fs[i]), cand)) - {cand}).pop()
            if other in rik:
                u = cand
                break
        assert u is not None, "an odd straddler count provides an anchor"
        u_comp_j = vertices_of(_component_of(frozenset(fs[j]), u))
        v = min(w for w in rij if w != u and w not in u_comp_j)
    else:
        anchors = [t for t in straddlers[i]]
        assert len(anchors) >= 2 and len(straddlers[j]) >= 2
        u = (_ends(anchors[0]) & rij).pop()
        x1 = (_ends(anchors[1]) & rij).pop()
        x2 = None
        for t in straddlers[j]:
            cand = (_ends(t) & rij).pop()
            if cand != u:
                x2 = cand
                break
        assert x2 is not None
        u_comp_j = _component_of(frozenset(fs[j]), u)
        w = (_ends(u_comp_j) - {u}).pop()
        banned = {u, x1, w} if w in rij else {u, x1, x2}
        v = min(rij - banned)
        assert v not in vertices_of(u_comp_j)
    e = edge(u, v)
    assert e not in fs[i] and e not in fs[j]
    assert v not in vertices_of(_component_of(frozenset(fs[i]), u))
    fs[i].add(e)
    fs[j].add(e)
    return e


def _reduce_endpoints(triple: ForestTriple, for_cycles: bool) -> ForestTriple:
    """Greedily add join edges until every shared endpoint count hits its
    floor: 1 for the path target, 2 for the cycle target."""
    floor = 2 if for_cycles else 1
    want_parity = 0 if for_cycles else 1
    assert triple.parity == want_parity
    if for_cycles:
        assert min(triple.t1, triple.t2, triple.t3) > 0
    fs = [set(triple.f1), set(triple.f2), set(triple.f3)]
    cur = triple
    while max(cur.r12, cur.r13, cur.r23) > floor:
        total = cur.r12 + cur.r13 + cur.r23
        by_pair = {(0, 1): cur.r12, (0, 2): cur.r13, (1, 2): cur.r23}
        i, j = next(p for p in ((0, 1), (0, 2), (1, 2)) if by_pair[p] > floor)
        r_sets, straddlers, _ = _analyze(tuple(frozenset(f) for f in fs))
        _join_step(fs, i, j, r_sets, straddlers, for_cycles)
        cur = forest_stats(*fs)
        assert cur.r12 + cur.r13 + cur.r23 == total - 2
        assert cur.parity == want_parity
        if for_cycles:
            assert min(cur.t1, cur.t2, cur.t3) > 0
    assert (cur.r12, cur.r13, cur.r23) == (floor, floor, floor)
    return cur


def _close_into_cycles(triple: ForestTriple, n: int) -> list[frozenset[Edge]]:
    """Close a (2,2,2)-endpoint triple into three cycles by adding each
    shared endpoint pair's edge to both of its forests."""
    r_sets, _, _ = _analyze(triple.forests)
    joins = {key: edge(*sorted(r_sets[key])) for key in ((0, 1), (0, 2), (1, 2))}
    for (i, j), e in joins.items():
        assert e not in triple.forests[i] and e not in triple.forests[j]
    parts = [
        frozenset(triple.f1 | {joins[(0, 1)], joins[(0, 2)]}),
        frozenset(triple.f2 | {joins[(0, 1)], joins[(1, 2)]}),
        frozenset(triple.f3 | {joins[(0, 2)], joins[(1, 2)]}),
    ]
    for part in parts:
        assert classify(part, n) is SubgraphShape.CYCLE
    return parts


def _make_cert(kind: str, parts: Iterable[Iterable[tuple[int, int]]], g: SimpleGraph) -> OddCoverCert:
    """Normalize parts (drop empties, cancel duplicate pairs), then check
    the cover: right shapes, right span, xor equal to the graph."""
    assert kind in ("path", "cycle")
    norm = [_canon(p) for p in parts]
    counts = Counter(norm)
    kept: list[frozenset[Edge]] = []
    seen: set[frozenset[Edge]] = set()
    for part in norm:
        if not part or part in seen:
            continue
        seen.add(part)
        if counts[part] % 2:
            kept.append(part)
    want = SubgraphShape.PATH if kind == "path" else SubgraphShape.CYCLE
    for part in kept:
        assert classify(part, g.n) is want
    assert symmetric_difference(kept) == g.edges
    return OddCoverCert(kind, tuple(kept))


def path_odd_cover_delta4(g: SimpleGraph) -> OddCoverCert:
    """Cover an Eulerian graph of maximum degree 4 with at most 3 paths.

    Splits the graph into two polycycles, picks a transversal pair with
    odd vertex intersection, and joins the resulting forests' endpoints
    until each forest is a single path.
    """
    summary = degrees(g)
    if summary.v_odd:
        raise NotEulerian("graph has a vertex of odd degree")
    if summary.delta > 4:
        raise PreconditionViolated(f"maximum degree must be at most 4, got {summary.delta}")
    if not g.edges:
        return OddCoverCert("path", ())
    if summary.delta <= 2:
        return _make_cert("path", polycycle_odd_cover(g.edges, "path"), g)

    h1, h2 = undirected_polycycle_decomposition(g, 2).parts
    tp = transversal_odd_intersection(h1, h2)
    triple = linear_forests_from_transversal(h1, h2, tp)
    assert triple.parity == 1
    final = _reduce_endpoints(triple, for_cycles=False)
    cert = _make_cert("path", final.forests, g)
    assert len(cert.parts) <= 3
    return cert


def cycle_odd_cover_delta4(g: SimpleGraph) -> OddCoverCert:
    """Cover an Eulerian graph of maximum degree 4 with at most 3 cycles.

    When the two polycycle halves cross in two disjoint component pairs,
    an even-parity transversal pair with a crossing witness yields three
    straddled forests that close into three cycles; otherwise all but
    one component of one half avoid the other half, and the leftover
    polycycle covers with two cycles.
    """
    summary = degrees(g)
    if summary.v_odd:
        raise NotEulerian("graph has a vertex of odd degree")
    if summary.delta > 4:
        raise PreconditionViolated(f"maximum degree must be at most 4, got {summary.delta}")
    if not g.edges:
        return OddCoverCert("cycle", ())
    if summary.delta <= 2:
        return _make_cert("cycle", polycycle_odd_cover(g.edges, "cycle"), g)

    h1, h2 = undirected_polycycle_decomposition(g, 2).parts
    comps1 = edge_components(h1)
    comps2 = edge_components(h2)
    meets = [
        (i, j)
        for i, c in enumerate(comps1)
        for j, d in enumerate(comps2)
        if vertices_of(c) & vertices_of(d)
    ]
    crossing = None
    for i, j in meets:
        for i2, j2 in meets:
            if i2 != i and j2 != j:
                crossing = ((comps1[i], comps2[j]), (comps1[i2], comps2[j2]))
                break
        if crossing:
            break

    if crossing is None:
        if not meets:
            parts = polycycle_odd_cover(h1 | h2, "cycle")
        else:
            first = {i for i, _ in meets}
            second = {j for _, j in meets}
            if len(first) == 1:
                apart = comps1[first.pop()]
                parts = polycycle_odd_cover(h2 | (h1 - apart), "cycle") + [apart]
            else:
                assert len(second) == 1
                apart = comps2[second.pop()]
                parts = polycycle_odd_cover(h1 | (h2 - apart), "cycle") + [apart]
        cert = _make_cert("cycle", parts, g)
        assert len(cert.parts) <= 3
        return cert

    tp, _witness = transversal_even_intersection(h1, h2, crossing)
    triple = linear_forests_from_transversal(h1, h2, tp)
    assert triple.parity == 0
    assert min(triple.t1, triple.t2, triple.t3) > 0
    final = _reduce_endpoints(triple, for_cycles=True)
    cert = _make_cert("cycle", _close_into_cycles(final, g.n), g)
    assert len(cert.parts) <= 3
    return cert


def odd_cover_eulerian(g: SimpleGraph, kind: str) -> OddCoverCert:
    """Cover an Eulerian graph with ceil(3*Delta/4) paths or with
    d1/2 + ceil(d2/4) cycles, d1 >= d2 the two largest degrees.

    Pairs up the polycycles of a full decomposition and covers each pair
    with the degree-4 routines; for cycles the decomposition threshold is
    d2/2 so the trailing parts are single cycles costing one part each.
    """
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")
    summary = degrees(g)
    if summary.v_odd:
        raise NotEulerian("graph has a vertex of odd degree")
    if not g.edges:
        return OddCoverCert(kind, ())

    parts: list[frozenset[Edge]] = []
    if kind == "path":
        dec = undirected_polycycle_decomposition(g, summary.delta // 2)
        assert dec.cycle_suffix_len == 0
        classes = list(dec.parts)
        bound = (3 * summary.delta + 3) // 4
    else:
        top = sorted(summary.degrees, reverse=True)
        d1, d2 = top[0], top[1]
        dec = undirected_polycycle_decomposition(g, d2 // 2)
        split = len(dec.parts) - dec.cycle_suffix_len
        classes = list(dec.parts[:split])
        parts.extend(dec.parts[split:])
        bound = d1 // 2 + (d2 + 3) // 4

    cover_pair = path_odd_cover_delta4 if kind == "path" else cycle_odd_cover_delta4
    for i in range(0, len(classes) - 1, 2):
        sub = SimpleGraph(g.n, classes[i] | classes[i + 1])
        parts.extend(cover_pair(sub).parts)
    if len(classes) % 2:
        parts.extend(polycycle_odd_cover(classes[-1], kind))

    cert = _make_cert(kind, parts, g)
    assert len(cert.parts) <= bound
    return cert


def path_odd_cover_general(g: SimpleGraph, tight: bool = False) -> OddCoverCert:
    """Cover any graph with at most v_odd/2 + ceil(3*Delta_e/4) paths.

    Pairs the odd-degree vertices into a matching M, covers the Eulerian
    graph g xor M, and adds each M edge as a one-edge path.  With
    ``tight=True`` (graphs on at most 10 vertices) an exhaustive search
    instead guarantees max(v_odd/2, ceil((v_odd/2 + 3*Delta_e)/4)) parts.
    """
    summary = degrees(g)
    odd = [u for u, d in enumerate(summary.degrees) if d % 2]
    matching = [edge(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    flipped = SimpleGraph(g.n, g.edges ^ frozenset(matching))
    assert degrees(flipped).delta <= summary.delta_e
    base = odd_cover_eulerian(flipped, "path")
    parts = list(base.parts) + [frozenset({e}) for e in matching]
    cert = _make_cert("path", parts, g)
    weak = len(matching) + (3 * summary.delta_e + 3) // 4
    assert len(cert.parts) <= weak
    if not tight:
        return cert

    if g.n > 10:
        raise TooLarge(f"tight search supports at most 10 vertices, got {g.n}")
    goal = max(len(matching), -(-(len(matching) + 3 * summary.delta_e) // 4))
    if len(cert.parts) <= goal:
        return cert
    found = _bounded_cover_search(g, "path", goal)
    assert found is not None, "the tight bound is always attainable"
    return _make_cert("path", found, g)


def linear_forest_decomposition(g: SimpleGraph) -> OddCoverCert:
    """Split a graph of maximum degree at most 4 into 3 disjoint linear forests.

    Completes the graph to an Eulerian one (a matching on odd vertices,
    detouring through a fresh vertex when the pair is already adjacent),
    splits that into two polycycles, applies the transversal-forest split,
    and restricts the three forests back to the original edges.
    """
    summary = degrees(g)
    if summary.delta > 4:
        raise PreconditionViolated(f"maximum degree must be at most 4, got {summary.delta}")
    empty = frozenset()
    if not g.edges:
        return OddCoverCert("linear_forest", (empty, empty, empty))

    n = g.n
    patch: set[Edge] = set()
    odd = [u for u, d in enumerate(summary.degrees) if d % 2]
    for i in range(0, len(odd), 2):
        u, v = odd[i], odd[i + 1]
        if edge(u, v) not in g.edges:
            patch.add(edge(u, v))
        else:
            patch.add(edge(u, n))
            patch.add(edge(v, n))
            n += 1
    host = SimpleGraph(n, g.edges | frozenset(patch))
    delta = degrees(host).delta
    assert delta in (2, 4) and not degrees(host).v_odd

    if delta == 2:
        m = frozenset(_transversal(host.edges))
        forests = (host.edges - m, m, empty)
    else:
        h1, h2 = undirected_polycycle_decomposition(host, 2).parts
        tp = TransversalPair(frozenset(_transversal(h1)), frozenset(_transversal(h2)))
        forests = linear_forests_from_transversal(h1, h2, tp).forests

    trimmed = tuple(f & g.edges for f in forests)
    assert symmetric_difference(trimmed) == g.edges
    assert sum(len(f) for f in trimmed) == g.m
    for f in trimmed:
        assert classify(f, g.n) in _FOREST_SHAPES
    return OddCoverCert("linear_forest", trimmed)


def _bounded_cover_search(
    g: SimpleGraph, kind: str, budget: int
) -> list[frozenset[Edge]] | None:
    """Smallest odd-cover of at most ``budget`` parts by exhaustive search.

    Parts range over all paths (or cycles) of the complete graph on V(g),
    precomputed as edge bitmasks.  Iterative deepening over the part count
    with a fixed rule — the next part must contain the smallest uncovered
    edge — so each cover is tried once; the last part is a set lookup.
    Failed (remaining, depth) states stay memoized across budgets, which is
    sound because a solution clashing with an earlier choice would cancel
    into a smaller cover that previous budgets already ruled out.
    Exponential; meant for tiny hosts.
    """
    n = g.n
    kn = [edge(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {e: i for i, e in enumerate(kn)}
    vbits = [0] * n
    for i, (u, v) in enumerate(kn):
        vbits[u] |= 1 << i
        vbits[v] |= 1 << i
    target = 0
    for e in g.edges:
        target |= 1 << index[e]

    def decode(mask: int) -> list[Edge]:
        out = []
        while mask:
            low = mask & -mask
            out.append(kn[low.bit_length() - 1])
            mask ^= low
        return out

    def odd_vertices(mask: int) -> int:
        return sum(1 for w in range(n) if (mask & vbits[w]).bit_count() % 2)

    masks: set[int] = set()
    if kind == "path":
        for start in range(n):
            stack = [(start, 1 << start, 0)]
            while stack:
                last, used, mask = stack.pop()
                if start < last:
                    masks.add(mask)
                for w in range(n):
                    if not used >> w & 1:
                        stack.append((w, used | 1 << w, mask | 1 << index[edge(last, w)]))
        max_part = n - 1
    else:
        for v0 in range(n):
            stack = [
                (w, 1 << v0 | 1 << w, 1 << index[edge(v0, w)], w)
                for w in range(v0 + 1, n)
            ]
            while stack:
                last, used, mask, second = stack.pop()
                if used.bit_count() >= 3 and second < last:
                    masks.add(mask | 1 << index[edge(last, v0)])
                for w in range(v0 + 1, n):
                    if not used >> w & 1:
                        stack.append((w, used | 1 << w, mask | 1 << index[edge(last, w)], second))
        max_part = n

    by_edge: list[list[int]] = [[] for _ in kn]
    for mask in sorted(masks):
        for e in decode(mask):
            by_edge[index[e]].append(mask)

    dead: set[tuple[int, int]] = set()

    def search(remaining: int, depth: int, acc: list[int]) -> bool:
        if not remaining:
            return True
        if depth == 0:
            return False
        if remaining.bit_count() > depth * max_part:
            return False
        stray = odd_vertices(remaining)
        if kind == "path" and stray > 2 * depth:
            return False
        if kind == "cycle" and stray:
            return False
        if depth == 1:
            if remaining in masks and remaining not in acc:
                acc.append(remaining)
                return True
            return False
        if (remaining, depth) in dead:
            return False
        low = remaining & -remaining
        for mask in by_edge[low.bit_length() - 1]:
            if mask in acc:
                continue
            acc.append(mask)
            if search(remaining ^ mask, depth - 1, acc):
                return True
            acc.pop()
        dead.add((remaining, depth))
        return False

    if kind == "cycle" and odd_vertices(target):
        return None
    for depth in range(budget + 1):
        acc: list[int] = []
        if search(target, depth, acc):
            return [frozenset(decode(mask)) for mask in acc]
    return None
