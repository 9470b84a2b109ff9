"""Monitoring and metrics module."""

from .logger import get_logger, log_context, setup_logging
from .metrics import MetricsCollector, get_metrics_collector

__all__ = [
    "get_logger",
    "log_context",
    "setup_logging",
    "MetricsCollector",
    "get_metrics_collector",
]
