"""Round-trip and validation tests for the JSON wire formats."""

from __future__ import annotations

import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from polyresolve import (
    CycleSeq,
    Digraph,
    LowerBoundInstance,
    OddCoverCert,
    Partition,
    PolycycleDecomposition,
    Report,
    Resolution,
    edge,
    gen_lower_bound_instance,
    path_odd_cover_general,
    resolve,
    simple_graph,
)
from polyresolve.generators import random_graph, random_instance
from polyresolve.jsonio import (
    emit,
    emit_cover,
    emit_decomposition,
    emit_digraph,
    emit_graph,
    emit_instance,
    emit_report,
    emit_resolution,
    parse_cover,
    parse_decomposition,
    parse_digraph,
    parse_graph,
    parse_instance,
    parse_report,
    parse_resolution,
)


def through_json(d: dict) -> dict:
    return json.loads(json.dumps(d))


# --- graphs -------------------------------------------------------------------


def test_graph_wire_format():
    g = simple_graph(4, [(2, 0), (1, 3)])
    d = emit_graph(g)
    assert d == {"n": 4, "edges": [[0, 2], [1, 3]]}
    assert parse_graph(through_json(d)) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_graph_round_trip(seed):
    g = random_graph(random.Random(seed))
    assert parse_graph(through_json(emit_graph(g))) == g


def test_digraph_wire_format():
    d0 = Digraph(3, (0, 1, 2), (1, 2, 2))
    d = emit_digraph(d0)
    assert d == {"n": 3, "arcs": [[0, 1], [1, 2], [2, 2]]}
    assert parse_digraph(through_json(d)) == d0


# --- instances ----------------------------------------------------------------


def test_instance_wire_format():
    p = Partition(2, (0, 0, 1))
    q = Partition(2, (1, 0, 0))
    d = emit_instance((p, q))
    assert d == {"m": 3, "n": 2, "p": [0, 0, 1], "p_prime": [1, 0, 0]}
    assert parse_instance(through_json(d)) == (p, q)


def test_lower_bound_instance_round_trip():
    inst = gen_lower_bound_instance((3, 2, 2, 1))
    d = emit_instance(inst)
    assert d["bound"] == inst.bound and d["family"] == inst.family
    back = parse_instance(through_json(d))
    assert isinstance(back, LowerBoundInstance)
    assert back == inst


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_instance_round_trip(seed):
    p, q = random_instance(random.Random(seed))
    assert parse_instance(through_json(emit_instance((p, q)))) == (p, q)


def test_instance_rejects_inconsistent_m():
    with pytest.raises(ValueError):
        parse_instance({"m": 5, "n": 2, "p": [0, 1], "p_prime": [1, 0]})


def test_instance_rejects_partial_bound():
    with pytest.raises(ValueError):
        parse_instance({"m": 2, "n": 2, "p": [0, 1], "p_prime": [1, 0], "bound": 1})


# --- resolutions ----------------------------------------------------------------


def test_resolution_wire_format():
    p = Partition(2, (0, 0, 1, 1))
    r = Resolution(p, (CycleSeq((0, 2)), CycleSeq((1, 3))))
    d = emit_resolution(r)
    assert d == {"type": "resolution", "taus": [[0, 2], [1, 3]]}
    assert parse_resolution(through_json(d), p) == r


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_resolution_round_trip(seed):
    p, q = random_instance(random.Random(seed))
    r = resolve(p, q)
    assert parse_resolution(through_json(emit_resolution(r)), p) == r


def test_resolution_rejects_wrong_type():
    with pytest.raises(ValueError):
        parse_resolution({"type": "odd_cover", "taus": []}, Partition(1, (0,)))


# --- covers ---------------------------------------------------------------------


def test_cover_wire_format():
    cert = OddCoverCert("path", (frozenset({edge(1, 0)}),))
    d = emit_cover(cert)
    assert d == {"type": "odd_cover", "kind": "path", "parts": [[[0, 1]]]}
    assert parse_cover(through_json(d)) == cert


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_cover_round_trip(seed):
    g = random_graph(random.Random(seed))
    cert = path_odd_cover_general(g)
    assert parse_cover(through_json(emit_cover(cert))) == cert


def test_cover_rejects_unknown_kind():
    with pytest.raises(ValueError):
        parse_cover({"type": "odd_cover", "kind": "tree", "parts": []})


# --- decompositions --------------------------------------------------------------


def test_decomposition_round_trip_arc_ids():
    dec = PolycycleDecomposition((frozenset({0, 1, 2}), frozenset({3, 4})), 1)
    assert parse_decomposition(through_json(emit_decomposition(dec))) == dec


def test_decomposition_round_trip_edges():
    dec = PolycycleDecomposition(
        (frozenset({edge(0, 1), edge(1, 2)}), frozenset({edge(0, 2)})), 0
    )
    assert parse_decomposition(through_json(emit_decomposition(dec))) == dec


# --- reports ----------------------------------------------------------------------


def test_report_round_trip():
    r = Report("diameter", True, "ok", 12)
    d = emit_report(r)
    assert d == {"check": "diameter", "pass": True, "detail": "ok", "elapsed_ms": 12}
    assert parse_report(through_json(d)) == r


# --- generic dispatch and errors ---------------------------------------------------


def test_emit_dispatch():
    g = simple_graph(2, [(0, 1)])
    assert emit(g) == emit_graph(g)
    p = Partition(1, (0, 0))
    assert emit((p, p)) == emit_instance((p, p))
    with pytest.raises(TypeError):
        emit("not a domain object")


def test_parse_reports_missing_keys():
    with pytest.raises(ValueError, match="missing key 'edges'"):
        parse_graph({"n": 3})
    with pytest.raises(ValueError, match="expected a JSON object"):
        parse_graph([1, 2])
