"""Short resolutions between partition-polytope vertices.

``resolve`` certifies that two equal-shape partitions are at most
k1 + ceil(k2/2) moves apart (k1 >= k2 the two largest cluster sizes): the
cluster difference digraph factors into balanced permutations and p-cycles,
balanced permutations split pairwise into at most three p-cycles each, and
the cycle list converts into an explicit edge walk.

The module also builds the matching lower-bound family: instances whose
difference digraph is a disjoint union of doubled 2-cycles (plus one tripled
3-cycle when the cluster count is odd), where a per-step progress cap forces
resolutions of length ceil(2|S|/g) for |S| displaced items.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadShape, NotAMatching, NotBalanced, ShapeMismatch, SupportsOverlap
from .perms import (
    CycleSeq,
    Partition,
    Permutation,
    Resolution,
    compose,
    cycle_is_p_cycle,
    is_p_balanced,
    perm_from_cycles,
    resolution_from_decomposition,
)
from .polycycles import balanced_permutation_factorization

__all__ = [
    "ColorClasses",
    "LowerBoundInstance",
    "PP36_FIRST_MOVE",
    "two_color_matchings",
    "pcycles_from_balanced",
    "pcycles_from_pair",
    "resolve",
    "gen_lower_bound_instance",
    "progress_lower_bound",
    "gen_pp36_instance",
]


@dataclass(frozen=True)
class ColorClasses:
    """A split of clusters such that every input matching edge straddles it."""

    s1: frozenset[int]
    s2: frozenset[int]


@dataclass(frozen=True)
class LowerBoundInstance:
    """An equal-shape pair whose shortest resolution is at least ``bound`` long."""

    p: Partition
    q: Partition
    bound: int
    family: str


def _validated_matching(edges, n: int, name: str) -> list[tuple[int, int]]:
    seen: set[int] = set()
    out = []
    for e in edges:
        u, v = sorted(e)
        if u == v or not 0 <= u < n or not 0 <= v < n:
            raise NotAMatching(f"{name} contains an invalid edge {(u, v)}")
        if u in seen or v in seen:
            raise NotAMatching(f"{name} repeats vertex {u if u in seen else v}")
        seen.update((u, v))
        out.append((u, v))
    return out


def two_color_matchings(m1, m2, n: int) -> ColorClasses:
    """Properly 2-color the union of two matchings on clusters 0..n-1.

    The union has maximum degree 2 and every cycle alternates between the
    matchings, so it is bipartite.  Isolated clusters join the first class.
    """
    edges = _validated_matching(m1, n, "m1") + _validated_matching(m2, n, "m2")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in set(edges):
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                else:
                    assert color[w] != color[u], "two matchings cannot form an odd cycle"
    s1 = frozenset(u for u in range(n) if color[u] == 0)
    s2 = frozenset(range(n)) - s1
    for u, v in edges:
        assert (u in s1) != (v in s1)
    return ColorClasses(s1, s2)


def pcycles_from_balanced(p: Partition, pi: Permutation) -> tuple[CycleSeq, CycleSeq]:
    """Split a p-balanced permutation into two p-cycles (second applied last).

    Concatenating the disjoint cycles of pi gives the first p-cycle; the
    cycle leaders in reverse order give the second.  A single-cycle pi
    yields a trivial second factor.
    """
    if not is_p_balanced(pi, p):
        raise NotBalanced("permutation is not p-balanced")
    cycles = pi.cycles()
    s1 = CycleSeq(tuple(x for c in cycles for x in c))
    s2 = CycleSeq(tuple(c[0] for c in reversed(cycles)))
    assert cycle_is_p_cycle(s1, p) and cycle_is_p_cycle(s2, p)
    assert compose(s2.to_permutation(p.m), s1.to_permutation(p.m)) == pi
    return s1, s2


def _rotate(cycle: tuple[int, ...], lead: int) -> tuple[int, ...]:
    i = cycle.index(lead)
    return cycle[i:] + cycle[:i]


def pcycles_from_pair(p: Partition, pi1: Permutation, pi2: Permutation) -> list[CycleSeq]:
    """Replace two support-disjoint p-balanced permutations by <=3 p-cycles.

    Returns cycles in application order whose product differs from pi2*pi1
    by a transposition of two same-cluster items, so applying them to p has
    the same effect.  When pi2*pi1 is itself p-balanced, two cycles suffice.
    """
    for pi in (pi1, pi2):
        if not is_p_balanced(pi, p):
            raise NotBalanced("permutation is not p-balanced")
    sup1, sup2 = pi1.support(), pi2.support()
    if set(sup1) & set(sup2):
        raise SupportsOverlap("permutations must have disjoint supports")

    composite = compose(pi2, pi1)
    if is_p_balanced(composite, p):
        return [s for s in pcycles_from_balanced(p, composite) if not s.is_trivial]

    smallest_in_cluster: dict[int, int] = {}
    for y in sorted(sup2):
        smallest_in_cluster.setdefault(p(y), y)
    x, y = min((x, smallest_in_cluster[p(x)]) for x in sup1 if p(x) in smallest_in_cluster)

    c_cycles = pi1.cycles()
    cx = next(c for c in c_cycles if x in c)
    cs = [cx] + [c for c in c_cycles if c is not cx]
    d_cycles = pi2.cycles()
    dy = next(c for c in d_cycles if y in c)
    ds = [c for c in d_cycles if c is not dy] + [dy]

    # One representative cluster pair per cycle; the pair for y's cycle is
    # pinned to {p(y), p(pi2(y))} so the coloring separates those clusters.
    m1 = [tuple(sorted(p(it) for it in c)[:2]) for c in cs]
    m2 = [tuple(sorted(p(it) for it in c)[:2]) for c in ds[:-1]]
    m2.append(tuple(sorted((p(y), p(pi2(y))))))
    colors = two_color_matchings(m1, m2, p.n)
    side1 = colors.s1 if p(x) in colors.s1 else colors.s2
    side2 = colors.s2 if p(x) in colors.s1 else colors.s1
    assert p(pi2(y)) in side2

    xs = [_rotate(cx, x)] + [
        _rotate(c, min(it for it in c if p(it) in side1)) for c in cs[1:]
    ]
    ys = [_rotate(c, min(it for it in c if p(it) in side2)) for c in ds[:-1]]
    ys.append(_rotate(dy, pi2(y)))
    assert ys[-1][-1] == y

    sigma1 = CycleSeq(tuple(it for c in xs for it in c))
    d_flat = [it for c in ys for it in c]
    sigma2 = CycleSeq(tuple(d_flat[:-1] + [x]))
    sigma3 = CycleSeq(
        tuple([c[0] for c in reversed(ys)] + [c[0] for c in reversed(xs[1:])] + [y])
    )
    for sigma in (sigma1, sigma2, sigma3):
        assert cycle_is_p_cycle(sigma, p)

    product = sigma1.to_permutation(p.m)
    product = compose(sigma2.to_permutation(p.m), product)
    product = compose(sigma3.to_permutation(p.m), product)
    assert compose(perm_from_cycles(p.m, [(x, y)]), product) == composite
    assert product.support() == composite.support()
    return [sigma1, sigma2, sigma3]


def resolve(p: Partition, q: Partition) -> Resolution:
    """Build a verified resolution from p to q of length <= k1 + ceil(k2/2)."""
    if p.sizes() != q.sizes():
        raise ShapeMismatch("p and q must have equal per-cluster sizes")
    sigmas, pis = balanced_permutation_factorization(p, q)
    parts: list[CycleSeq] = []
    for i in range(0, len(pis) - 1, 2):
        parts.extend(pcycles_from_pair(p, pis[i], pis[i + 1]))
    if len(pis) % 2:
        parts.extend(pcycles_from_balanced(p, pis[-1]))
    parts.extend(sigmas)
    parts = [s for s in parts if not s.is_trivial]

    result = resolution_from_decomposition(p, parts)
    assert result.end() == q
    shape = p.shape()
    k1 = shape[0] if shape else 0
    k2 = shape[1] if len(shape) > 1 else 0
    assert len(result.taus) <= k1 + (k2 + 1) // 2
    return result


def gen_lower_bound_instance(shape) -> LowerBoundInstance:
    """Build the hard instance for a non-increasing shape with >= 4 clusters.

    Clusters are paired off; each pair exchanges as many items as the
    smaller cluster holds, in both directions.  An odd cluster count leaves
    the last three clusters cycling items instead.  The shortest resolution
    is at least ceil(2|S|/g) where |S| counts displaced items and g is the
    largest per-step progress 3n/2 (n even) or (3n+1)/2 (n odd).
    """
    shape = tuple(int(k) for k in shape)
    n = len(shape)
    if n < 4:
        raise BadShape("need at least 4 clusters")
    if shape[-1] < 0 or any(shape[i] < shape[i + 1] for i in range(n - 1)):
        raise BadShape("cluster sizes must be non-increasing and non-negative")

    p_assign: list[int] = []
    q_assign: list[int] = []

    def fill(cluster: int, target: int, count: int) -> None:
        p_assign.extend([cluster] * count)
        q_assign.extend([target] * count)

    n_paired = n if n % 2 == 0 else n - 3
    for a in range(0, n_paired, 2):
        b = a + 1
        fill(a, b, shape[b])
        fill(a, a, shape[a] - shape[b])
        fill(b, a, shape[b])
    if n % 2:
        u, v, w = n - 3, n - 2, n - 1
        k = shape[w]
        fill(u, v, k)
        fill(u, u, shape[u] - k)
        fill(v, w, k)
        fill(v, v, shape[v] - k)
        fill(w, u, k)
        family = "odd2cycles3cycle"
    else:
        family = "even2cycles"

    p = Partition(n, tuple(p_assign))
    q = Partition(n, tuple(q_assign))
    bound = progress_lower_bound(p, q)
    return LowerBoundInstance(p, q, bound, family)


def progress_lower_bound(p: Partition, q: Partition) -> int:
    """ceil(2|S|/g) for |S| displaced items; sound for the hard-instance family.

    g caps the per-step progress at 3n/2 (n even) or (3n+1)/2 (n odd) when
    the difference digraph is a disjoint union of doubled 2-cycles (plus one
    tripled 3-cycle for odd n).  For general inputs the value is only a
    heuristic, not a certified bound.
    """
    if p.sizes() != q.sizes():
        raise ShapeMismatch("p and q must have equal per-cluster sizes")
    displaced = sum(1 for a, b in zip(p.assign, q.assign) if a != b)
    if displaced == 0:
        return 0
    denom = 3 * p.n if p.n % 2 == 0 else 3 * p.n + 1
    return -(-4 * displaced // denom)


def gen_pp36_instance() -> tuple[Partition, Partition]:
    """The 18-item, 6-cluster swap instance whose resolutions need 5 moves.

    Clusters 0..2 and 3..5 come in pairs (i, 3+i); all nine items sitting in
    cluster 3+i must move to i and vice versa, so the difference digraph is
    three disjoint 2-cycles with multiplicity 3 in both directions.
    """
    p = [0] * 18
    q = [0] * 18
    for i in range(3):
        for j in range(3):
            a = 3 * i + j
            b = 9 + 3 * i + j
            p[a], q[a] = 3 + i, i
            p[b], q[b] = i, 3 + i
    return Partition(6, tuple(p)), Partition(6, tuple(q))


# A best-possible first move for the instance above: one item from each
# cluster, alternating sides, realizing the maximum per-step progress of 9.
# Fixing it is sound when searching for short resolutions because relabeling
# items within start/target clusters acts transitively on such moves.
PP36_FIRST_MOVE = CycleSeq((0, 9, 3, 12, 6, 15))
