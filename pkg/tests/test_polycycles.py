"""Tests for polycycle decompositions and balanced factorizations."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyresolve.errors import NotEulerian, NotPolycycle, ThresholdViolated
from polyresolve.graphs import (
    Digraph,
    SubgraphShape,
    classify,
    edge,
    simple_graph,
    symmetric_difference,
)
from polyresolve.perms import Partition, compose, identity
from polyresolve.polycycles import (
    balanced_permutation_factorization,
    directed_polycycle_decomposition,
    polycycle_odd_cover,
    undirected_polycycle_decomposition,
)


def test_directed_decomposition_splits_a_doubled_triangle():
    # two arc-disjoint directed triangles on 0,1,2
    g = Digraph(3, (0, 1, 2, 0, 2, 1), (1, 2, 0, 2, 1, 0))
    dec = directed_polycycle_decomposition(g, 2)
    assert len(dec.parts) == 2
    assert dec.cycle_suffix_len == 0
    assert frozenset().union(*dec.parts) == frozenset(range(6))
    assert not dec.parts[0] & dec.parts[1]


def test_directed_decomposition_rejects_unbalanced_digraphs():
    with pytest.raises(NotEulerian):
        directed_polycycle_decomposition(Digraph(2, (0,), (1,)), 1)


def test_directed_decomposition_extracts_cycles_through_the_heavy_vertex():
    # vertex 0 has out-degree 3; everyone else 1
    g = Digraph(4, (0, 1, 0, 2, 0, 3), (1, 0, 2, 0, 3, 0))
    dec = directed_polycycle_decomposition(g, 2)
    assert len(dec.parts) == 3
    assert dec.cycle_suffix_len == 1


def test_directed_decomposition_enforces_single_heavy_vertex():
    # two vertices above the threshold t=1
    g = Digraph(4, (0, 1, 0, 2, 1, 3), (1, 0, 2, 0, 3, 1))
    with pytest.raises(ThresholdViolated):
        directed_polycycle_decomposition(g, 1)


def test_undirected_decomposition_covers_a_four_regular_graph():
    # K5 is 4-regular and Eulerian
    g = simple_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    dec = undirected_polycycle_decomposition(g, 2)
    assert len(dec.parts) == 2
    assert symmetric_difference(dec.parts) == g.edges


def test_polycycle_odd_cover_of_a_single_cycle():
    cyc = [edge(0, 1), edge(1, 2), edge(0, 2)]
    assert polycycle_odd_cover(cyc, "cycle") == [frozenset(cyc)]
    paths = polycycle_odd_cover(cyc, "path")
    assert len(paths) == 2
    assert symmetric_difference(paths) == frozenset(cyc)
    for part in paths:
        assert classify(part, 3) is SubgraphShape.PATH


def test_polycycle_odd_cover_of_two_disjoint_triangles():
    pc = [edge(0, 1), edge(1, 2), edge(0, 2), edge(3, 4), edge(4, 5), edge(3, 5)]
    for kind, want in (("path", SubgraphShape.PATH), ("cycle", SubgraphShape.CYCLE)):
        parts = polycycle_odd_cover(pc, kind)
        assert len(parts) <= 2
        assert symmetric_difference(parts) == frozenset(pc)
        for part in parts:
            assert classify(part, 6) is want


def test_polycycle_odd_cover_rejects_shared_vertices():
    fig8 = [edge(0, 1), edge(1, 2), edge(0, 2), edge(2, 3), edge(3, 4), edge(2, 4)]
    with pytest.raises(NotPolycycle):
        polycycle_odd_cover(fig8, "path")


def test_polycycle_odd_cover_rejects_unknown_kind():
    with pytest.raises(ValueError):
        polycycle_odd_cover([edge(0, 1)], "tree")


def test_factorization_of_a_two_cluster_swap():
    p = Partition(3, (0, 0, 1, 2))
    q = Partition(3, (1, 2, 0, 0))
    sigmas, pis = balanced_permutation_factorization(p, q)
    assert len(sigmas) == 1 and len(pis) == 1
    total = identity(p.m)
    for s in sigmas:
        total = compose(s.to_permutation(p.m), total)
    for pi in pis:
        total = compose(pi, total)
    assert p.apply(total) == q


def equal_shape_pairs(max_clusters=4, max_items=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_clusters))
        extra = draw(st.lists(st.integers(0, n - 1), max_size=max_items - n))
        base = list(range(n)) + extra
        return (
            Partition(n, tuple(draw(st.permutations(base)))),
            Partition(n, tuple(draw(st.permutations(base)))),
        )

    return build()


@given(equal_shape_pairs())
@settings(max_examples=150, deadline=None)
def test_factorization_applies_back_to_the_target(pair):
    p, q = pair
    sigmas, pis = balanced_permutation_factorization(p, q)
    sizes = sorted(p.sizes(), reverse=True)
    k1, k2 = sizes[0], sizes[1]
    assert len(sigmas) <= max(k1 - k2, 0)
    assert len(pis) <= k2
    total = identity(p.m)
    for s in sigmas:
        total = compose(s.to_permutation(p.m), total)
    for pi in pis:
        total = compose(pi, total)
    assert p.apply(total) == q
