"""Exact graph invariants and the degree predicates of the hamiltonicity lemmas."""

from .predicates import (
    connectivity_toughness_bound,
    degree_sum_check,
    dirac_type_check,
    exceeds_insertion_threshold,
    is_proper_cutset,
    min_degree,
    require_cutset,
)
from .rational import INFINITY, Rational, as_rational, ceil_rational, floor_rational, is_infinite
from .structure import alpha_at_least, connectivity, independence_number
from .toughness import ToughnessCertificate, is_t_tough, toughness

__all__ = [
    "connectivity_toughness_bound",
    "degree_sum_check",
    "dirac_type_check",
    "exceeds_insertion_threshold",
    "is_proper_cutset",
    "min_degree",
    "require_cutset",
    "INFINITY",
    "Rational",
    "as_rational",
    "ceil_rational",
    "floor_rational",
    "is_infinite",
    "alpha_at_least",
    "connectivity",
    "independence_number",
    "ToughnessCertificate",
    "is_t_tough",
    "toughness",
]
