"""Induced-pattern detection and the cutset structure classifier."""

from .cutsets import (
    ClauseResult,
    ClauseStatus,
    CutsetClassification,
    CutsetLemmaReport,
    check_lemma21,
    classify_cutset,
)
from .freeness import (
    independent_set_pattern,
    is_free,
    is_p3_kp1_free,
    p2_union_kp1,
    p3_union_kp1,
    p4,
)
from .induced import MAX_PATTERN_SIZE, PatternWitness, find_induced

__all__ = [
    "ClauseResult",
    "ClauseStatus",
    "CutsetClassification",
    "CutsetLemmaReport",
    "check_lemma21",
    "classify_cutset",
    "independent_set_pattern",
    "is_free",
    "is_p3_kp1_free",
    "p2_union_kp1",
    "p3_union_kp1",
    "p4",
    "MAX_PATTERN_SIZE",
    "PatternWitness",
    "find_induced",
]
