"""Tests for odd covers by paths/cycles and linear-forest decompositions."""

from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from polyresolve import (
    SimpleGraph,
    SubgraphShape,
    TransversalPair,
    classify,
    cycle_odd_cover_delta4,
    degrees,
    edge,
    edge_components,
    flexible_exchange,
    forest_stats,
    linear_forest_decomposition,
    linear_forests_from_transversal,
    odd_cover_eulerian,
    path_odd_cover_delta4,
    path_odd_cover_general,
    simple_graph,
    symmetric_difference,
    transversal_even_intersection,
    transversal_odd_intersection,
    vertices_of,
)
from polyresolve.generators import (
    random_delta4_eulerian_graph,
    random_delta4_graph,
    random_eulerian_graph,
    random_graph,
)
from polyresolve.oddcover import _bounded_cover_search


def cyc(*vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def check_cover(cert, g, kind, limit):
    assert cert.kind == kind
    want = SubgraphShape.PATH if kind == "path" else SubgraphShape.CYCLE
    for part in cert.parts:
        assert classify(part, g.n) is want
    assert symmetric_difference(cert.parts) == g.edges
    assert len(set(cert.parts)) == len(cert.parts)
    assert len(cert.parts) <= limit


def complete(n):
    return simple_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# The interlocked pair: two vertex-disjoint C4s per side whose union is
# 4-regular on 8 vertices, with every component of one side meeting both
# components of the other.
H1 = cyc(0, 4, 1, 5) + cyc(2, 6, 3, 7)
H2 = cyc(0, 2, 1, 3) + cyc(4, 6, 5, 7)


# --- forest statistics and transversal forests -------------------------------


def test_forest_stats_triangle_of_single_edges():
    t = forest_stats([(0, 1)], [(0, 2)], [(1, 2)])
    assert (t.r12, t.r13, t.r23) == (1, 1, 1)
    assert (t.t1, t.t2, t.t3) == (1, 1, 1)
    assert t.parity == 1


def test_forest_stats_empty():
    t = forest_stats([], [], [])
    assert (t.r12, t.r13, t.r23, t.t1, t.t2, t.t3, t.parity) == (0,) * 7


def test_linear_forests_from_disjoint_transversal():
    h1, h2 = cyc(0, 1, 2, 3), cyc(4, 5, 6, 7)
    tp = TransversalPair(frozenset({edge(0, 1)}), frozenset({edge(4, 5)}))
    t = linear_forests_from_transversal(h1, h2, tp)
    assert classify(t.f3, 8) is SubgraphShape.PATH
    assert t.f2 == frozenset({edge(0, 1), edge(4, 5)})
    assert t.parity == 0


# --- exchange moves on a single cycle ----------------------------------------


def test_flexible_exchange_single_marked_vertex():
    chosen, e0, e1 = flexible_exchange(cyc(0, 1, 2), {0}, 0, 3)
    assert chosen == {0}
    assert (e0, e1) == ((1, 2), (0, 1))


def test_flexible_exchange_all_marked():
    chosen, e0, e1 = flexible_exchange(cyc(0, 1, 2), {0, 1, 2}, 0, 3)
    assert chosen == {1, 2, 3}
    assert (e0, e1) == ((1, 2), (0, 1))


def test_flexible_exchange_alternating():
    chosen, e0, e1 = flexible_exchange(cyc(0, 1, 2, 3), {0, 2}, 0, 4)
    assert chosen == {2, 4}
    assert len(set(e0) & chosen) % 2 == 0
    assert len(set(e1) & chosen) % 2 == 1


# --- transversal construction on the interlocked pair ------------------------


def test_transversal_odd_intersection_interlocked():
    tp = transversal_odd_intersection(H1, H2)
    inter = vertices_of(tp.m1) & vertices_of(tp.m2)
    assert len(inter) % 2 == 1


def test_transversal_even_intersection_rigid_witness():
    comps1 = edge_components(frozenset(edge(u, v) for u, v in H1))
    comps2 = edge_components(frozenset(edge(u, v) for u, v in H2))
    crossing = ((comps1[0], comps2[0]), (comps1[1], comps2[1]))
    tp, wit = transversal_even_intersection(H1, H2, crossing)
    inter = vertices_of(tp.m1) & vertices_of(tp.m2)
    assert len(inter) % 2 == 0
    u, v1, v2 = wit
    assert edge(u, v1) in tp.m1
    assert edge(u, v2) in tp.m2


# --- covers of fixed graphs ---------------------------------------------------


def test_interlocked_union_covers():
    g = simple_graph(8, H1 + H2)
    check_cover(cycle_odd_cover_delta4(g), g, "cycle", 3)
    check_cover(path_odd_cover_delta4(g), g, "path", 3)


def test_c5_cover_counts():
    c5 = simple_graph(5, cyc(0, 1, 2, 3, 4))
    assert len(path_odd_cover_delta4(c5).parts) == 2
    assert len(cycle_odd_cover_delta4(c5).parts) == 1


def test_k5_covers():
    k5 = complete(5)
    check_cover(path_odd_cover_delta4(k5), k5, "path", 3)
    check_cover(cycle_odd_cover_delta4(k5), k5, "cycle", 3)


def test_two_disjoint_k5s_need_three_cycles():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(u + 5, v + 5) for u, v in edges[:10]]
    kk = simple_graph(10, edges)
    cert = cycle_odd_cover_delta4(kk)
    check_cover(cert, kk, "cycle", 3)
    assert len(cert.parts) == 3


def test_k7_eulerian_covers():
    k7 = complete(7)
    check_cover(odd_cover_eulerian(k7, "path"), k7, "path", 5)
    check_cover(odd_cover_eulerian(k7, "cycle"), k7, "cycle", 5)


def test_star_paths():
    star = simple_graph(4, [(0, 1), (0, 2), (0, 3)])
    check_cover(path_odd_cover_general(star), star, "path", 5)
    check_cover(path_odd_cover_general(star, tight=True), star, "path", 4)


def test_single_edge_is_one_path():
    one = simple_graph(2, [(0, 1)])
    assert len(path_odd_cover_general(one).parts) == 1


def test_empty_graph_covers():
    empty = simple_graph(3, [])
    assert len(path_odd_cover_general(empty).parts) == 0
    assert len(odd_cover_eulerian(empty, "cycle").parts) == 0
    assert len(linear_forest_decomposition(empty).parts) == 3


def test_eulerian_cover_rejects_bad_kind():
    with pytest.raises(ValueError):
        odd_cover_eulerian(simple_graph(3, cyc(0, 1, 2)), "forest")


# --- randomized cover properties ----------------------------------------------


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_delta4_covers_random_eulerian(seed):
    rng = random.Random(seed)
    g = random_delta4_eulerian_graph(rng)
    check_cover(path_odd_cover_delta4(g), g, "path", 3)
    check_cover(cycle_odd_cover_delta4(g), g, "cycle", 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_eulerian_covers_meet_degree_bounds(seed):
    rng = random.Random(seed)
    g = random_eulerian_graph(rng, layers=rng.randint(1, 4), max_n=12)
    if not g.edges:
        return
    summ = degrees(g)
    check_cover(odd_cover_eulerian(g, "path"), g, "path", (3 * summ.delta + 3) // 4)
    top = sorted(summ.degrees, reverse=True)
    check_cover(
        odd_cover_eulerian(g, "cycle"), g, "cycle", top[0] // 2 + (top[1] + 3) // 4
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_general_path_cover_bounds(seed):
    rng = random.Random(seed)
    g = random_graph(rng)
    summ = degrees(g)
    weak = summ.v_odd // 2 + (3 * summ.delta_e + 3) // 4
    check_cover(path_odd_cover_general(g), g, "path", weak)
    if g.n <= 6 and g.edges:
        tight = max(summ.v_odd // 2, -(-(summ.v_odd // 2 + 3 * summ.delta_e) // 4))
        check_cover(path_odd_cover_general(g, tight=True), g, "path", tight)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_linear_forest_decomposition_random(seed):
    rng = random.Random(seed)
    g = random_delta4_graph(rng)
    cert = linear_forest_decomposition(g)
    assert cert.kind == "linear_forest"
    assert len(cert.parts) == 3
    assert symmetric_difference(cert.parts) == g.edges
    assert sum(len(f) for f in cert.parts) == g.m
    for f in cert.parts:
        assert classify(f, g.n) in (
            SubgraphShape.EMPTY,
            SubgraphShape.PATH,
            SubgraphShape.LINEAR_FOREST,
        )


# --- exhaustive minimum search -------------------------------------------------


def test_bounded_search_known_minima():
    c5 = simple_graph(5, cyc(0, 1, 2, 3, 4))
    assert len(_bounded_cover_search(c5, "cycle", 3)) == 1
    k3 = complete(3)
    assert len(_bounded_cover_search(k3, "cycle", 2)) == 1
    assert len(_bounded_cover_search(k3, "path", 3)) == 2
    star = simple_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert len(_bounded_cover_search(star, "path", 3)) == 2


def test_bounded_search_k7_optima():
    k7 = complete(7)
    assert len(_bounded_cover_search(k7, "path", 5)) == 4
    assert len(_bounded_cover_search(k7, "cycle", 5)) == 3


def test_bounded_search_parity_obstructions():
    p3 = simple_graph(3, [(0, 1), (1, 2)])
    assert _bounded_cover_search(p3, "cycle", 4) is None
    assert len(_bounded_cover_search(p3, "path", 2)) == 1
    assert _bounded_cover_search(simple_graph(2, [(0, 1)]), "cycle", 4) is None


def test_bounded_search_respects_budget():
    k3 = complete(3)
    assert _bounded_cover_search(k3, "path", 1) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_bounded_search_parts_are_valid(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_n=6)
    found = _bounded_cover_search(g, "path", 5)
    if not g.edges:
        assert found == []
        return
    assert found is not None
    want = SubgraphShape.PATH
    for part in found:
        assert classify(part, g.n) is want
    assert symmetric_difference(found) == g.edges
    # The constructive covers can never beat the exhaustive minimum.
    assert len(found) <= len(path_odd_cover_general(g, tight=True).parts)
