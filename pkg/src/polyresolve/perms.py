"""Partitions of items into clusters, permutations, and resolutions.

Composition convention
----------------------
Products of permutations are function composition read right to left:
``compose(a, b)`` maps ``x`` to ``a(b(x))``, so in a product written
``a b`` the right factor acts first on the argument.  A partition is
transformed on the right, ``(p @ tau)(x) = p(tau(x))``, which makes a
step-by-step replay ``p, p@t1, (p@t1)@t2, ...`` land on
``p @ (t1 t2 ... tk)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidResolution, NotPCycle, SizeMismatch
from .graphs import Digraph


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..m-1`` stored as its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a bijection on 0..m-1")

    @property
    def m(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def support(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.image) if x != y)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element,
        ordered by that element."""
        seen = [False] * self.m
        out = []
        for x in range(self.m):
            if seen[x] or self.image[x] == x:
                seen[x] = True
                continue
            cyc = [x]
            seen[x] = True
            y = self.image[x]
            while y != x:
                cyc.append(y)
                seen[y] = True
                y = self.image[y]
            out.append(tuple(cyc))
        return out


def identity(m: int) -> Permutation:
    return Permutation(tuple(range(m)))


def perm_from_cycles(m: int, cycles) -> Permutation:
    image = list(range(m))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            image[a] = b
        if len(cyc) > 1:
            image[cyc[-1]] = cyc[0]
    return Permutation(tuple(image))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``x -> a(b(x))``; the right factor acts first."""
    if a.m != b.m:
        raise SizeMismatch(f"composing permutations on {a.m} and {b.m} items")
    return Permutation(tuple(a.image[y] for y in b.image))


@dataclass(frozen=True)
class CycleSeq:
    """One cyclic exchange ``(x1 ... xt)`` sending each listed item to its
    successor.  Stored rotated so the smallest element comes first; length
    0 or 1 means the identity."""

    items: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise ValueError("cycle entries must be distinct")
        if len(self.items) >= 2:
            k = self.items.index(min(self.items))
            object.__setattr__(self, "items", self.items[k:] + self.items[:k])

    def __len__(self) -> int:
        return len(self.items)

    @property
    def is_trivial(self) -> bool:
        return len(self.items) < 2

    def to_permutation(self, m: int) -> Permutation:
        return perm_from_cycles(m, [self.items])


TRIVIAL = CycleSeq(())


@dataclass(frozen=True)
class Partition:
    """Assignment of items ``0..m-1`` to clusters ``0..n-1``."""

    n: int
    assign: tuple[int, ...]

    def __post_init__(self):
        for c in self.assign:
            if not 0 <= c < self.n:
                raise ValueError(f"cluster {c} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.assign)

    def __call__(self, x: int) -> int:
        return self.assign[x]

    def sizes(self) -> tuple[int, ...]:
        """Cluster sizes indexed by cluster label."""
        out = [0] * self.n
        for c in self.assign:
            out[c] += 1
        return tuple(out)

    def shape(self) -> tuple[int, ...]:
        """Cluster sizes sorted descending."""
        return tuple(sorted(self.sizes(), reverse=True))

    def apply(self, pi: Permutation | CycleSeq) -> "Partition":
        """Right action: item ``x`` ends up in the old cluster of ``pi(x)``."""
        if isinstance(pi, CycleSeq):
            pi = pi.to_permutation(self.m)
        if pi.m != self.m:
            raise SizeMismatch(f"permutation on {pi.m} items, partition has {self.m}")
        return Partition(self.n, tuple(self.assign[pi(x)] for x in range(self.m)))


def is_p_balanced(pi: Permutation, p: Partition) -> bool:
    """True iff ``p`` is injective on the support of ``pi``."""
    if pi.m != p.m:
        raise SizeMismatch(f"permutation on {pi.m} items, partition has {p.m}")
    hit: set[int] = set()
    for x in pi.support():
        c = p(x)
        if c in hit:
            return False
        hit.add(c)
    return True


def is_p_cycle(sigma: Permutation, p: Partition) -> bool:
    """True iff ``sigma`` is a single cycle (or the identity) and balanced."""
    return len(sigma.cycles()) <= 1 and is_p_balanced(sigma, p)


def cycle_is_p_cycle(tau: CycleSeq, p: Partition) -> bool:
    if tau.is_trivial:
        return True
    seenc: set[int] = set()
    for x in tau.items:
        if not 0 <= x < p.m:
            return False
        c = p(x)
        if c in seenc:
            return False
        seenc.add(c)
    return True


def cdg(p: Partition, q: Partition) -> Digraph:
    """Cluster digraph with one arc per item: arc ``j`` runs
    ``p(j) -> q(j)``; items that do not move contribute loops."""
    if p.m != q.m or p.n != q.n:
        raise SizeMismatch("partitions must share item and cluster counts")
    return Digraph(p.n, p.assign, q.assign)


@dataclass(frozen=True)
class Resolution:
    """A walk ``p -> p@t1 -> ...`` through partitions; each step must be a
    cycle of the partition it is applied to (checked by replay)."""

    start: Partition
    taus: tuple[CycleSeq, ...]

    def __len__(self) -> int:
        return len(self.taus)

    def replay(self) -> list[Partition]:
        """All intermediate partitions, beginning with ``start``."""
        out = [self.start]
        for i, tau in enumerate(self.taus):
            if not cycle_is_p_cycle(tau, out[-1]):
                raise InvalidResolution(i)
            out.append(out[-1].apply(tau))
        return out

    def end(self) -> Partition:
        return self.replay()[-1]


def resolution_from_decomposition(p: Partition, sigmas) -> Resolution:
    """Turn a list of cycles of ``p`` into a replayable walk.

    Each returned step is the conjugate of the corresponding input cycle by
    the product of its predecessors, so that prefix products agree:
    ``t1 ... ti == si ... s1`` at every ``i`` (asserted).
    """
    sigmas = list(sigmas)
    acc = identity(p.m)      # s_{i-1} ... s_1
    run = identity(p.m)      # t_1 ... t_i
    taus = []
    for i, s in enumerate(sigmas):
        if not cycle_is_p_cycle(s, p):
            raise NotPCycle(i)
        inv = acc.inverse()
        tau = CycleSeq(tuple(inv(x) for x in s.items))
        taus.append(tau)
        acc = compose(s.to_permutation(p.m), acc)
        run = compose(run, tau.to_permutation(p.m))
        assert run == acc, "prefix identity violated"
    return Resolution(p, tuple(taus))


def decomposition_from_resolution(r: Resolution) -> list[CycleSeq]:
    """Inverse of :func:`resolution_from_decomposition`: recover cycles of
    the starting partition from a replayable walk."""
    run = identity(r.start.m)    # t_1 ... t_{i-1}
    acc = identity(r.start.m)    # s_{i-1} ... s_1
    cur = r.start
    sigmas = []
    for i, tau in enumerate(r.taus):
        if not cycle_is_p_cycle(tau, cur):
            raise InvalidResolution(i)
        sigma = CycleSeq(tuple(run(x) for x in tau.items))
        if not cycle_is_p_cycle(sigma, r.start):
            raise InvalidResolution(i, f"step {i} conjugates outside the start partition")
        sigmas.append(sigma)
        cur = cur.apply(tau)
        run = compose(run, tau.to_permutation(r.start.m))
        acc = compose(sigma.to_permutation(r.start.m), acc)
        assert run == acc, "prefix identity violated"
    return sigmas


def check_resolution(p: Partition, q: Partition, taus) -> str | None:
    """None if the steps walk from ``p`` to ``q``; else the first failure."""
    if p.m != q.m or p.n != q.n:
        return "partitions live on different ground sets"
    cur = p
    for i, tau in enumerate(taus):
        if any(not 0 <= x < p.m for x in tau.items):
            return f"step {i} names an unknown item"
        if not cycle_is_p_cycle(tau, cur):
            return f"step {i} revisits a cluster"
        cur = cur.apply(tau)
    if cur != q:
        return "final partition differs from the target"
    return None


def verify_resolution(p: Partition, q: Partition, taus) -> bool:
    return check_resolution(p, q, taus) is None
