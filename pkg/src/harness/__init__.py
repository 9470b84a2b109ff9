"""Lemma harness, tightness search, graph file formats and the command line."""

from .formats import (
    emit_edge_list,
    emit_graph,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graph,
    write_graph,
)
from .lemmas import LEMMAS, CheckResult, LemmaCheck, get_lemma
from .runner import LemmaReport, Violation, replay_violation, resolve_source, run_lemma_suite
from .sources import Instance, SourceSpec
from .tightness import TightnessRecord, TightnessReport, tightness_search

__all__ = [
    "emit_edge_list",
    "emit_graph",
    "emit_graph6",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "read_graph",
    "write_graph",
    "LEMMAS",
    "CheckResult",
    "LemmaCheck",
    "get_lemma",
    "LemmaReport",
    "Violation",
    "replay_violation",
    "resolve_source",
    "run_lemma_suite",
    "Instance",
    "SourceSpec",
    "TightnessRecord",
    "TightnessReport",
    "tightness_search",
]
