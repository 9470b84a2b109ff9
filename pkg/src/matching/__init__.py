"""Star matchings and generalized K_{1,2s}-matchings."""

from .flow import DeficientSet, StarMatching, max_deficiency_set, star_matching
from .generalized import (
    ComponentPartition,
    ComponentPartners,
    GeneralizedStarMatching,
    ValidationResult,
    balance_component_partition,
    generalized_matching,
    validate_generalized_matching,
)

__all__ = [
    "DeficientSet",
    "StarMatching",
    "max_deficiency_set",
    "star_matching",
    "ComponentPartition",
    "ComponentPartners",
    "GeneralizedStarMatching",
    "ValidationResult",
    "balance_component_partition",
    "generalized_matching",
    "validate_generalized_matching",
]
