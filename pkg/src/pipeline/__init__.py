"""Hamiltonian cycle construction for 15-tough (P3 u 3P1)-free graphs."""

from .assembly import AssemblyOutcome, assemble_lemma27, insert_component
from .decomposition import (
    DecompositionState,
    PipelineOptions,
    Shortcut,
    ShortcutKind,
    decompose,
    min_degree_sum_pair,
    split_pair_neighborhood,
)
from .deficiency import DeficiencySplit, deficiency_split
from .driver import construct_hamiltonian_cycle, disjoint_edge_count
from .gluing import GlueOutcome, build_path_family, claim1_glue, route_clique
from .heavy_clique import heavy_clique_search, heavy_weight
from .instance import TOUGHNESS_THRESHOLD, EvidenceKind, TheoremInstance, ToughnessEvidence
from .trace import TERMINAL_TAGS, BranchTag, CycleTrace

__all__ = [
    "AssemblyOutcome",
    "assemble_lemma27",
    "insert_component",
    "DecompositionState",
    "PipelineOptions",
    "Shortcut",
    "ShortcutKind",
    "decompose",
    "min_degree_sum_pair",
    "split_pair_neighborhood",
    "DeficiencySplit",
    "deficiency_split",
    "construct_hamiltonian_cycle",
    "disjoint_edge_count",
    "GlueOutcome",
    "build_path_family",
    "claim1_glue",
    "route_clique",
    "heavy_clique_search",
    "heavy_weight",
    "TOUGHNESS_THRESHOLD",
    "EvidenceKind",
    "TheoremInstance",
    "ToughnessEvidence",
    "TERMINAL_TAGS",
    "BranchTag",
    "CycleTrace",
]
