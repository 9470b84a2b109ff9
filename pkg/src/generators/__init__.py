"""Graph sources: enumeration, random repair, certified families and planted instances."""

from .certified import (
    BRUTE_FORCE_MAX_N,
    CertifiedGraph,
    Provenance,
    ProvenanceKind,
    certify_brute_force,
)
from .enumeration import (
    MAX_ENUMERATION_N,
    MAX_FREE_ENUMERATION_N,
    canonical_form,
    enumerate_free,
    enumerate_small,
    relabel,
)
from .families import (
    NAMED_GRAPHS,
    clique_join,
    clique_join_toughness,
    complete_multipartite,
    multipartite_toughness,
    named_graph,
)
from .planted import PLANTED_KINDS, planted_lemma_instance
from .random_graphs import random_free_graph

__all__ = [
    "BRUTE_FORCE_MAX_N",
    "CertifiedGraph",
    "Provenance",
    "ProvenanceKind",
    "certify_brute_force",
    "MAX_ENUMERATION_N",
    "MAX_FREE_ENUMERATION_N",
    "canonical_form",
    "enumerate_free",
    "enumerate_small",
    "relabel",
    "NAMED_GRAPHS",
    "clique_join",
    "clique_join_toughness",
    "complete_multipartite",
    "multipartite_toughness",
    "named_graph",
    "PLANTED_KINDS",
    "planted_lemma_instance",
    "random_free_graph",
]
