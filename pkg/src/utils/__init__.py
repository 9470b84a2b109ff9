"""Utility functions and shared errors."""

from .errors import (
    AnomalyError,
    ConstructionError,
    EndpointMismatchError,
    GraphFormatError,
    HypothesisError,
    InteriorCollisionError,
    PreconditionError,
    SizeLimitError,
    SpliceError,
    ToughHamError,
)
from .helpers import Rational, elapsed_since, format_rational, get_timestamp, parse_rational

__all__ = [
    "AnomalyError",
    "ConstructionError",
    "EndpointMismatchError",
    "GraphFormatError",
    "HypothesisError",
    "InteriorCollisionError",
    "PreconditionError",
    "SizeLimitError",
    "SpliceError",
    "ToughHamError",
    "Rational",
    "elapsed_since",
    "format_rational",
    "get_timestamp",
    "parse_rational",
]
