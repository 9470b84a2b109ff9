"""Metrics collection using Prometheus."""

from typing import Dict, Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, start_http_server

from ..config import Settings, get_settings
from .logger import get_logger

logger = get_logger(__name__)


class MetricsCollector:
    """Collector for Prometheus metrics on construction and verification runs."""

    def __init__(self, settings: Optional[Settings] = None):
        """
        Initialize metrics collector.

        Each collector owns its registry, so several may coexist in one process.

        Args:
            settings: Application settings
        """
        self.settings = settings or get_settings()
        self.enabled = self.settings.enable_prometheus
        self.registry = CollectorRegistry()

        self.branch_counter = Counter(
            "toughham_pipeline_branch_total",
            "Pipeline branch tags emitted",
            ["branch"],
            registry=self.registry,
        )
        self.rung_counter = Counter(
            "toughham_insertion_rung_total",
            "Vertex insertions by ladder rung",
            ["rung"],
            registry=self.registry,
        )
        self.oracle_counter = Counter(
            "toughham_oracle_calls_total",
            "Exact oracle invocations",
            ["method", "verdict"],
            registry=self.registry,
        )
        self.fallback_counter = Counter(
            "toughham_oracle_fallback_total",
            "Constructive steps that fell back to exhaustive search",
            ["operation"],
            registry=self.registry,
        )
        self.lemma_instances = Counter(
            "toughham_lemma_instances_total",
            "Lemma-suite instances tested",
            ["lemma"],
            registry=self.registry,
        )
        self.lemma_violations = Counter(
            "toughham_lemma_violations_total",
            "Lemma-suite violations found",
            ["lemma"],
            registry=self.registry,
        )
        self.oracle_effort = Histogram(
            "toughham_oracle_search_states",
            "Search states visited per oracle call",
            ["method"],
            buckets=(10, 100, 1_000, 10_000, 100_000, 1_000_000, 10_000_000),
            registry=self.registry,
        )

    def start_server(self) -> None:
        """Start Prometheus metrics HTTP server."""
        if self.enabled:
            try:
                start_http_server(self.settings.prometheus_port, registry=self.registry)
                logger.info("metrics_server_started", port=self.settings.prometheus_port)
            except Exception as e:
                logger.error("metrics_server_failed", error=str(e))

    def record_branch(self, branch: str) -> None:
        """Record a pipeline branch tag."""
        try:
            self.branch_counter.labels(branch=branch).inc()
        except Exception as e:
            logger.error("metrics_record_failed", metric="branch", error=str(e))

    def record_rung(self, rung: str) -> None:
        """Record which insertion-ladder rung produced a cycle."""
        try:
            self.rung_counter.labels(rung=rung).inc()
        except Exception as e:
            logger.error("metrics_record_failed", metric="rung", error=str(e))

    def record_oracle(self, method: str, verdict: str, states: int = 0) -> None:
        """
        Record an oracle invocation.

        Args:
            method: Search method (dp, backtracking, subset_dp)
            verdict: YES, NO or UNKNOWN
            states: Number of search states visited
        """
        try:
            self.oracle_counter.labels(method=method, verdict=verdict).inc()
            if states > 0:
                self.oracle_effort.labels(method=method).observe(states)
        except Exception as e:
            logger.error("metrics_record_failed", metric="oracle", error=str(e))

    def record_fallback(self, operation: str) -> None:
        """Record a fallback from a constructive step to exhaustive search."""
        try:
            self.fallback_counter.labels(operation=operation).inc()
        except Exception as e:
            logger.error("metrics_record_failed", metric="fallback", error=str(e))

    def record_lemma(self, lemma: str, instances: int, violations: int) -> None:
        """
        Record lemma-suite totals.

        Args:
            lemma: Lemma identifier
            instances: Instances tested
            violations: Violations found
        """
        try:
            self.lemma_instances.labels(lemma=lemma).inc(instances)
            if violations:
                self.lemma_violations.labels(lemma=lemma).inc(violations)
        except Exception as e:
            logger.error("metrics_record_failed", metric="lemma", error=str(e))

    def counts(self, metric: str) -> Dict[str, float]:
        """
        Read back the current values of a labelled counter.

        Args:
            metric: Counter name without the ``_total`` suffix

        Returns:
            Mapping of the joined label values to the counter value
        """
        values: Dict[str, float] = {}
        for family in self.registry.collect():
            if family.name != metric:
                continue
            for sample in family.samples:
                if sample.name.endswith("_total"):
                    values[",".join(sample.labels.values())] = sample.value
        return values


_metrics_collector: Optional[MetricsCollector] = None


def get_metrics_collector() -> MetricsCollector:
    """Get global metrics collector instance."""
    global _metrics_collector
    if _metrics_collector is None:
        _metrics_collector = MetricsCollector()
    return _metrics_collector
