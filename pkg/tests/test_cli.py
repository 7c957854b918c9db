"""End-to-end tests of the command line, driven in-process through main()."""

from __future__ import annotations

import json

import pytest

from polyresolve import Partition, simple_graph
from polyresolve.cli import main
from polyresolve.jsonio import emit_graph, emit_instance


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def swap_instance(tmp_path):
    p = Partition(2, (0, 0, 1, 1))
    q = Partition(2, (1, 1, 0, 0))
    return write_json(tmp_path / "inst.json", emit_instance((p, q)))


def k5_graph(tmp_path):
    g = simple_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    return write_json(tmp_path / "k5.json", emit_graph(g))


# --- resolve -------------------------------------------------------------------


def test_resolve_writes_verified_certificate(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    out = tmp_path / "res.json"
    assert main(["resolve", "--instance", inst, "--out", str(out)]) == 0
    cert = json.loads(out.read_text())
    assert cert["type"] == "resolution"
    assert 1 <= len(cert["taus"]) <= 3


def test_resolve_prints_to_stdout(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    assert main(["resolve", "--instance", inst]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["type"] == "resolution"


def test_resolve_missing_instance_is_usage_error(capsys):
    assert main(["resolve"]) == 2


def test_resolve_unreadable_file_is_usage_error(tmp_path, capsys):
    assert main(["resolve", "--instance", str(tmp_path / "nope.json")]) == 2


def test_resolve_dot_output(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    dot = tmp_path / "res.dot"
    assert main(["resolve", "--instance", inst, "--dot", str(dot)]) == 0
    assert dot.read_text().startswith("digraph G {")


# --- oddcover and arboricity -----------------------------------------------------


def test_oddcover_paths(tmp_path, capsys):
    g = k5_graph(tmp_path)
    out = tmp_path / "cover.json"
    assert main(["oddcover", "--graph", g, "--kind", "path", "--out", str(out)]) == 0
    cert = json.loads(out.read_text())
    assert cert["kind"] == "path"
    assert len(cert["parts"]) <= 3


def test_oddcover_exact_cycles(tmp_path, capsys):
    g = k5_graph(tmp_path)
    out = tmp_path / "cover.json"
    rc = main(["oddcover", "--graph", g, "--kind", "cycle", "--exact", "--out", str(out)])
    assert rc == 0
    cert = json.loads(out.read_text())
    assert cert["kind"] == "cycle"
    assert len(cert["parts"]) == 2


def test_oddcover_cycle_parity_obstruction(tmp_path, capsys):
    g = write_json(tmp_path / "p3.json", {"n": 3, "edges": [[0, 1], [1, 2]]})
    assert main(["oddcover", "--graph", g, "--kind", "cycle"]) == 2


def test_arboricity(tmp_path, capsys):
    g = k5_graph(tmp_path)
    out = tmp_path / "forests.json"
    assert main(["arboricity", "--graph", g, "--out", str(out)]) == 0
    cert = json.loads(out.read_text())
    assert cert["kind"] == "linear_forest"
    assert len(cert["parts"]) == 3


def test_arboricity_rejects_high_degree(tmp_path, capsys):
    star5 = {"n": 6, "edges": [[0, i] for i in range(1, 6)]}
    g = write_json(tmp_path / "star5.json", star5)
    assert main(["arboricity", "--graph", g]) == 2


# --- diameter and lowerbound ------------------------------------------------------


def test_diameter_bound_and_exact(capsys):
    assert main(["diameter", "--shape", "2,2"]) == 0
    bound = int(capsys.readouterr().out.strip())
    assert bound == 3
    assert main(["diameter", "--shape", "2,2", "--exact"]) == 0
    assert int(capsys.readouterr().out.strip()) == 2


def test_diameter_exact_cap(capsys):
    assert main(["diameter", "--shape", "4,4,4,4", "--exact", "--cap", "100"]) == 2


def test_diameter_bad_shape(capsys):
    assert main(["diameter", "--shape", "2,x"]) == 2


def test_lowerbound_emits_instance(tmp_path, capsys):
    out = tmp_path / "hard.json"
    assert main(["lowerbound", "--shape", "2,2,2,2", "--out", str(out)]) == 0
    inst = json.loads(out.read_text())
    assert inst["bound"] == 3
    assert inst["family"] == "even2cycles"


def test_lowerbound_needs_four_clusters(capsys):
    assert main(["lowerbound", "--shape", "2,2"]) == 2


# --- verify ------------------------------------------------------------------------


def test_verify_good_certificate(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    cert = tmp_path / "res.json"
    assert main(["resolve", "--instance", inst, "--out", str(cert)]) == 0
    assert main(["verify", "--instance", inst, str(cert)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["pass"] is True


def test_verify_bad_certificate_exits_one(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    cert = write_json(tmp_path / "bad.json", {"type": "resolution", "taus": []})
    assert main(["verify", "--instance", inst, str(cert)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["pass"] is False


def test_verify_malformed_certificate_exits_one(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    cert = write_json(tmp_path / "bad.json", {"type": "resolution", "taus": [[0, 1, 0]]})
    assert main(["verify", "--instance", inst, str(cert)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["pass"] is False
    assert "malformed" in report["detail"]


def test_verify_cover_against_graph(tmp_path, capsys):
    g = k5_graph(tmp_path)
    cert = tmp_path / "cover.json"
    assert main(["oddcover", "--graph", g, "--kind", "cycle", "--out", str(cert)]) == 0
    assert main(["verify", "--graph", g, str(cert)]) == 0


def test_verify_unreadable_certificate_exits_two(tmp_path, capsys):
    inst = swap_instance(tmp_path)
    missing = str(tmp_path / "missing.json")
    assert main(["verify", "--instance", inst, missing]) == 2


# --- gen ---------------------------------------------------------------------------


def test_gen_is_deterministic(capsys):
    assert main(["gen", "--family", "random", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--family", "random", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first
    assert main(["gen", "--family", "random", "--seed", "8"]) == 0
    assert capsys.readouterr().out != first


def test_gen_families(tmp_path, capsys):
    for family, extra, keys in [
        ("random", [], {"p", "p_prime"}),
        ("k2", [], {"p", "p_prime"}),
        ("pp36", [], {"p", "p_prime"}),
        ("lowerbound", ["--shape", "2,2,2,2"], {"p", "p_prime", "bound", "family"}),
        ("graph", [], {"edges"}),
        ("eulerian", [], {"edges"}),
        ("delta4", [], {"edges"}),
    ]:
        assert main(["gen", "--family", family, *extra]) == 0, family
        payload = json.loads(capsys.readouterr().out)
        assert keys <= set(payload), family


def test_gen_unknown_family_rejected(capsys):
    with pytest.raises(SystemExit) as err:
        main(["gen", "--family", "nonsense"])
    assert err.value.code == 2


# --- parser level errors and selftest ------------------------------------------------


def test_unknown_verb_exits_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_selftest_passes(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) == 11
    assert all(ln.startswith("PASS") for ln in lines)
