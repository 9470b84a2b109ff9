"""Tests for lemma suite runs and the tightness search."""

from fractions import Fraction

import pytest

from src.graph import cycle_graph
from src.harness import (
    SourceSpec,
    Violation,
    emit_graph6,
    replay_violation,
    resolve_source,
    run_lemma_suite,
    tightness_search,
)
from src.invariants import as_rational
from src.monitoring.metrics import get_metrics_collector
from src.utils.errors import PreconditionError


def test_kappa_tau_suite():
    """Test an enumerated run over every graph on 3 to 5 vertices."""
    source = SourceSpec(kind="enumerate", n_min=3, n_max=5)
    report = run_lemma_suite("kappa-tau", source)
    assert report.instances_sourced == 4 + 11 + 34
    assert report.passed
    assert 0 < report.instances_tested < report.instances_sourced
    assert run_lemma_suite("kappa-tau", source).fingerprint() == report.fingerprint()


def test_budget_caps_the_stream():
    """Test the budget limits sourced instances."""
    source = SourceSpec(kind="enumerate", n_min=3, n_max=5)
    assert run_lemma_suite("kappa-tau", source, budget=10).instances_sourced == 10


def test_planted_only_checks_force_the_planted_source(harness_config):
    """Test configuration defaults and the planted override."""
    assert resolve_source("2.2").kind == "planted"
    assert resolve_source("2.2", {"kind": "enumerate"}).kind == "planted"
    assert resolve_source("2.1").n_max == 7
    assert resolve_source("2.1", {"n_max": 4, "seed": None}).n_max == 4
    report = run_lemma_suite("2.2", SourceSpec(kind="enumerate", samples=5))
    assert report.source["kind"] == "planted"
    assert report.instances_sourced == 5
    assert report.passed


def test_random_source_is_seeded():
    """Test equal seeds give equal reports."""
    source = SourceSpec(kind="random", n_min=5, n_max=6, samples=4, k=1, seed=11)
    first = run_lemma_suite("2.6", source)
    assert first.instances_sourced == 8
    assert run_lemma_suite("2.6", source).fingerprint() == first.fingerprint()


def test_free_source_runs_path_covers():
    """Test the free-graph stream feeds a suite and skips nothing it sources."""
    source = SourceSpec(kind="free", n_min=1, n_max=6, k=2)
    report = run_lemma_suite("pathcover", source)
    assert report.passed, report.violations[:3]
    assert report.instances_tested == report.instances_sourced > 0


def test_cover_and_ce_defaults_reach_nine_vertices(harness_config):
    """Test the path-cover and CE suites default to free graphs up to n = 9."""
    for lemma_id in ("pathcover", "CE"):
        source = resolve_source(lemma_id)
        assert (source.kind, source.k, source.n_max) == ("free", 2, 9)


@pytest.mark.slow
@pytest.mark.parametrize("lemma_id", ["pathcover", "CE"])
def test_cover_and_ce_hold_on_every_nine_vertex_free_graph(lemma_id):
    """Test the n = 9 layer on its own, every instance from the extension stream."""
    report = run_lemma_suite(lemma_id, SourceSpec(kind="free", n_min=9, n_max=9, k=2))
    assert report.passed, report.violations[:3]
    assert report.instances_tested > 0


def test_unknown_lemma():
    """Test unknown ids are refused."""
    with pytest.raises(PreconditionError):
        run_lemma_suite("no-such-lemma")


def test_suite_metrics():
    """Test tested instances are counted per lemma."""
    collector = get_metrics_collector()
    before = collector.counts("toughham_lemma_instances").get("kappa-tau", 0.0)
    report = run_lemma_suite("kappa-tau", SourceSpec(kind="enumerate", n_min=4, n_max=4))
    after = collector.counts("toughham_lemma_instances")["kappa-tau"]
    assert after == before + report.instances_tested


def test_replay_violation():
    """Test a replayed clean graph yields no findings."""
    violation = Violation(graph6=emit_graph6(cycle_graph(5)), clause="kappa_below_2tau")
    result = replay_violation("kappa-tau", violation)
    assert result.tested
    assert result.findings == []


def test_tightness_search_small_orders():
    """Test no small free nonhamiltonian graph is 1-tough."""
    report = tightness_search(n_max=5)
    assert report.counterexamples == []
    assert report.records
    assert as_rational(report.max_toughness) < 1
    assert [r.graph6 for r in report.records] == sorted(r.graph6 for r in report.records)
    assert all(r.nonhamiltonian and r.origin == "enumerate" for r in report.records)


def test_tightness_search_reports_low_thresholds():
    """Test finds at or above t_max are reported as counterexamples."""
    report = tightness_search(t_max=Fraction(1, 2), n_max=5)
    assert report.counterexamples
    assert all(as_rational(r.toughness) >= Fraction(1, 2) for r in report.counterexamples)


def test_tightness_search_limit():
    """Test the order envelope."""
    with pytest.raises(PreconditionError):
        tightness_search(n_max=19)


@pytest.mark.slow
@pytest.mark.parametrize(
    "lemma_id",
    [
        "2.1",
        "2.2",
        "2.3",
        "cor2.4",
        "2.5",
        "2.6",
        "pathcover",
        "2.8",
        "dirac",
        "2.7",
        "result13",
        "CE",
        "deficiency-split-maximality",
        "2.12",
        "kappa-tau",
        "result7ii",
    ],
)
def test_every_suite_passes_with_defaults(harness_config, lemma_id):
    """Test each registered check over its configured source."""
    report = run_lemma_suite(lemma_id)
    assert report.passed, report.violations[:3]
    assert report.instances_tested > 0
