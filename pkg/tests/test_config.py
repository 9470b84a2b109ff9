"""Tests for settings, suite defaults and metrics."""

import pytest
import structlog
from pydantic import ValidationError

from src.config import Settings, get_settings
from src.monitoring import log_context
from src.monitoring.metrics import MetricsCollector


def test_settings_defaults(monkeypatch):
    """Test default envelopes."""
    monkeypatch.delenv("TOUGHHAM_THREADS", raising=False)
    settings = get_settings()
    assert settings.threads == 1
    assert settings.exact_toughness_max_n == 20
    assert settings.oracle_max_n == 24
    assert settings.enable_prometheus is False


def test_settings_from_env(monkeypatch):
    """Test environment variables override the defaults."""
    monkeypatch.setenv("TOUGHHAM_THREADS", "3")
    monkeypatch.setenv("TOUGHHAM_ORACLE_MAX_N", "16")
    settings = get_settings()
    assert settings.threads == 3
    assert settings.oracle_max_n == 16


def test_settings_reject_zero_threads(monkeypatch):
    """Test the thread count must be positive."""
    monkeypatch.setenv("TOUGHHAM_THREADS", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_suite_defaults(harness_config):
    """Test per-lemma defaults come from the YAML file."""
    suites = get_settings().load_suite_defaults()
    assert suites["2.1"]["kind"] == "enumerate"
    assert suites["2.7"] == {"kind": "planted", "samples": 20, "seed": 5}
    assert "kappa-tau" in suites


def test_suite_defaults_missing_file(monkeypatch, tmp_path):
    """Test a missing config file gives no defaults."""
    monkeypatch.setenv("CONFIG_FILE", str(tmp_path / "absent.yaml"))
    assert get_settings().load_suite_defaults() == {}


def test_metrics_counts():
    """Test counters read back per label."""
    collector = MetricsCollector()
    collector.record_branch("SHORTCUT")
    collector.record_branch("SHORTCUT")
    collector.record_branch("DECOMPOSE")
    assert collector.counts("toughham_pipeline_branch") == {"SHORTCUT": 2.0, "DECOMPOSE": 1.0}


def test_metrics_oracle_and_lemma():
    """Test oracle and lemma counters."""
    collector = MetricsCollector()
    collector.record_oracle("dp", "YES", states=120)
    collector.record_lemma("2.1", 7, 0)
    collector.record_lemma("2.1", 3, 2)
    assert collector.counts("toughham_oracle_calls") == {"dp,YES": 1.0}
    assert collector.counts("toughham_lemma_instances") == {"2.1": 10.0}
    assert collector.counts("toughham_lemma_violations") == {"2.1": 2.0}


def test_collectors_are_independent():
    """Test each collector owns its registry."""
    first, second = MetricsCollector(), MetricsCollector()
    first.record_fallback("insertion")
    assert first.counts("toughham_oracle_fallback") == {"insertion": 1.0}
    assert second.counts("toughham_oracle_fallback") == {}


def test_metrics_server_respects_settings(monkeypatch, mocker):
    """Test the exporter starts only when enabled."""
    server = mocker.patch("src.monitoring.metrics.start_http_server")
    MetricsCollector().start_server()
    server.assert_not_called()

    monkeypatch.setenv("ENABLE_PROMETHEUS", "true")
    monkeypatch.setenv("PROMETHEUS_PORT", "9123")
    collector = MetricsCollector(Settings())
    collector.start_server()
    server.assert_called_once_with(9123, registry=collector.registry)


def test_log_context_binds_and_restores():
    """Test bound values apply only inside the block."""
    with log_context(lemma="2.1", seed=4):
        assert structlog.contextvars.get_contextvars() == {"lemma": "2.1", "seed": 4}
    assert "lemma" not in structlog.contextvars.get_contextvars()
