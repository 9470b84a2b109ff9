"""Tests for the command-line surface."""

import json

import pytest

from src.graph import complete_graph, cycle_graph
from src.harness import read_graph, write_graph
from src.harness.cli import EXIT_INPUT, EXIT_OK, main

C5_EDGES = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.edges"
    path.write_text(C5_EDGES)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, json.loads(out) if code == EXIT_OK else None, err


def test_analyze(capsys, c5_file):
    """Test the invariants reported for the 5-cycle."""
    code, payload, _ = run(capsys, "analyze", c5_file)
    assert code == EXIT_OK
    assert payload["n"] == 5
    assert payload["kappa"] == 2
    assert payload["alpha"] == 2
    assert payload["toughness"]["value"] == "1"
    assert payload["hamiltonian"] == "YES"
    assert payload["freeness"] == {"1": None, "2": None, "3": None}


def test_oracle(capsys, c5_file):
    """Test the exact cycle answer."""
    code, payload, _ = run(capsys, "oracle", c5_file)
    assert code == EXIT_OK
    assert payload["verdict"] == "YES"
    assert payload["witness"] == [0, 1, 2, 3, 4]


def test_oracle_pinned_path(capsys, c5_file):
    """Test a path between adjacent ends."""
    code, payload, _ = run(capsys, "oracle", c5_file, "--ends", 0, 1)
    assert code == EXIT_OK
    assert payload["verdict"] == "YES"
    assert {payload["witness"][0], payload["witness"][-1]} == {0, 1}


def test_cycle_on_complete_graph(capsys, tmp_path):
    """Test the construction takes the shortcut on K5."""
    path = tmp_path / "k5.g6"
    write_graph(complete_graph(5), path)
    code, payload, _ = run(capsys, "cycle", path)
    assert code == EXIT_OK
    assert payload["terminal"] == "SHORTCUT"
    assert payload["validated"] is True
    assert sorted(payload["cycle"]) == list(range(5))


def test_cycle_refuses_low_toughness(capsys, tmp_path):
    """Test a graph below the toughness threshold is an input error."""
    path = tmp_path / "c6.g6"
    write_graph(cycle_graph(6), path)
    code, _, err = run(capsys, "cycle", path)
    assert code == EXIT_INPUT
    assert "error:" in err


def test_gen_multipartite(capsys):
    """Test generated families carry their certificate."""
    code, payload, _ = run(capsys, "gen", "multipartite", "2,2,2")
    assert code == EXIT_OK
    assert payload["n"] == 6
    assert payload["certificate"]["toughness"] == "2"


def test_gen_writes_file(capsys, tmp_path):
    """Test --out writes a readable graph."""
    out = tmp_path / "c5.g6"
    code, payload, _ = run(capsys, "gen", "cycle", 5, "--out", out)
    assert code == EXIT_OK
    assert payload["path"] == str(out)
    assert read_graph(out) == cycle_graph(5)


def test_gen_unknown_family(capsys):
    """Test unknown families are input errors."""
    code, _, err = run(capsys, "gen", "hypercube", 3)
    assert code == EXIT_INPUT
    assert "unknown family" in err


def test_lemma(capsys, harness_config):
    """Test a small suite run over enumerated graphs."""
    code, payload, _ = run(capsys, "lemma", "kappa-tau", "--n-max", 4)
    assert code == EXIT_OK
    assert payload["passed"] is True
    assert payload["instances_sourced"] == 4 + 11
    assert len(payload["fingerprint"]) == 64


def test_lemma_free_source(capsys, harness_config):
    """Test the free-graph source and its pattern size from the command line."""
    code, payload, _ = run(capsys, "lemma", "CE", "--source", "free", "--k", 1, "--n-max", 5)
    assert code == EXIT_OK
    assert payload["passed"] is True
    assert (payload["source"]["kind"], payload["source"]["k"]) == ("free", 1)


def test_lemma_unknown_id(capsys):
    """Test unknown lemma ids are input errors."""
    code, _, err = run(capsys, "lemma", "no-such-lemma")
    assert code == EXIT_INPUT
    assert "error:" in err


def test_search(capsys):
    """Test the tightness search over small orders."""
    code, payload, _ = run(capsys, "search", "--n-max", 5)
    assert code == EXIT_OK
    assert payload["counterexamples"] == []


def test_missing_file(capsys, tmp_path):
    """Test unreadable input files."""
    code, _, err = run(capsys, "analyze", tmp_path / "missing.g6")
    assert code == EXIT_INPUT
    assert "error:" in err
