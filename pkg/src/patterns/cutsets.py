"""Cutset structure in (P3 u kP1)-free graphs."""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional

from ..graph import Graph, components, dominates, induced, is_complete, iter_bits, members
from ..invariants import require_cutset
from ..utils.errors import HypothesisError
from .freeness import is_p3_kp1_free


@dataclass(frozen=True)
class CutsetClassification:
    """S1/S2 split of a cutset and the components of G - S."""

    cutset: int
    s1: int
    s2: int
    components: List[int]
    noncomplete_index: Optional[int]


def classify_cutset(g: Graph, s: int) -> CutsetClassification:
    """
    Split S by how many components of G - S each vertex sees.

    Vertices of S seeing no component belong to neither S1 nor S2.

    Raises:
        PreconditionError: S is not a cutset
    """
    require_cutset(g, s, "classify_cutset")
    comps = components(g, s)
    s1 = s2 = 0
    for x in iter_bits(s):
        seen = sum(1 for c in comps if g.adj[x] & c)
        if seen == 1:
            s1 |= 1 << x
        elif seen >= 2:
            s2 |= 1 << x
    noncomplete = next((i for i, c in enumerate(comps) if not is_complete(g, c)), None)
    return CutsetClassification(s, s1, s2, comps, noncomplete)


class ClauseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"
    UNCHECKED = "unchecked"


@dataclass
class ClauseResult:
    status: ClauseStatus
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CutsetLemmaReport:
    """Per-clause verdicts for one (G, S, k) triple."""

    k: int
    components: int
    clauses: Dict[str, ClauseResult]

    @property
    def passed(self) -> bool:
        return all(c.status != ClauseStatus.FAIL for c in self.clauses.values())

    def failures(self) -> Dict[str, Dict[str, Any]]:
        return {name: c.detail for name, c in self.clauses.items() if c.status == ClauseStatus.FAIL}


def _dominated(g: Graph, x: int, comps: List[int]) -> List[int]:
    return [i for i, c in enumerate(comps) if dominates(g, x, c)]


def _clause_one(g: Graph, cls: CutsetClassification, k: int) -> ClauseResult:
    w = len(cls.components)
    if w != k:
        return ClauseResult(ClauseStatus.NOT_APPLICABLE, {"w": w})
    bad = [members(c) for c in cls.components if not is_complete(g, c)]
    if len(bad) > 1:
        return ClauseResult(ClauseStatus.FAIL, {"noncomplete_components": bad})
    if bad and k >= 2:
        sub, _ = induced(g, cls.components[cls.noncomplete_index])
        free, witness = is_p3_kp1_free(sub, 1)
        if not free:
            return ClauseResult(
                ClauseStatus.FAIL,
                {"component": bad[0], "p3_p1_witness_local": witness.to_list()},
            )
    return ClauseResult(ClauseStatus.PASS)


def _clause_two(g: Graph, cls: CutsetClassification, k: int) -> ClauseResult:
    w = len(cls.components)
    if w < k + 1:
        return ClauseResult(ClauseStatus.NOT_APPLICABLE, {"w": w})
    if cls.noncomplete_index is not None:
        return ClauseResult(
            ClauseStatus.FAIL,
            {"noncomplete_component": members(cls.components[cls.noncomplete_index])},
        )
    for x in iter_bits(cls.s1 | cls.s2):
        if not _dominated(g, x, cls.components):
            return ClauseResult(ClauseStatus.FAIL, {"vertex": x, "dominates": []})
    return ClauseResult(ClauseStatus.PASS)


def _clause_three(g: Graph, cls: CutsetClassification, k: int) -> ClauseResult:
    w = len(cls.components)
    if w < k + 2:
        return ClauseResult(ClauseStatus.NOT_APPLICABLE, {"w": w})
    outer = components(g, cls.s2)
    if len(outer) < w:
        return ClauseResult(ClauseStatus.FAIL, {"w_minus_s2": len(outer), "w": w})
    need = len(outer) - k + 1
    for x in iter_bits(cls.s2):
        got = len(_dominated(g, x, outer))
        if got < need:
            return ClauseResult(
                ClauseStatus.FAIL, {"vertex": x, "dominated": got, "required": need}
            )
    need_common = w - 2 * (k - 1)
    for x, y in combinations(members(cls.s2), 2):
        common = set(_dominated(g, x, cls.components)) & set(_dominated(g, y, cls.components))
        if len(common) < need_common:
            return ClauseResult(
                ClauseStatus.FAIL,
                {"pair": [x, y], "common": len(common), "required": need_common},
            )
    return ClauseResult(ClauseStatus.PASS)


def check_lemma21(g: Graph, s: int, k: int) -> CutsetLemmaReport:
    """
    Verify the cutset-structure clauses for a (P3 u kP1)-free graph.

    Clause (iii)'s per-vertex domination count is taken over the components
    of G - S2. A fourth clause cited elsewhere without a statement is
    reported as unchecked.

    Args:
        g: Graph, checked to be (P3 u kP1)-free
        s: Cutset
        k: Pattern parameter, k >= 1

    Returns:
        CutsetLemmaReport

    Raises:
        HypothesisError: g contains an induced P3 u kP1
        PreconditionError: S is not a cutset
    """
    free, witness = is_p3_kp1_free(g, k)
    if not free:
        raise HypothesisError("p3_kp1_free", f"graph contains an induced P3 u {k}P1", witness)
    cls = classify_cutset(g, s)
    clauses = {
        "i": _clause_one(g, cls, k),
        "ii": _clause_two(g, cls, k),
        "iii": _clause_three(g, cls, k),
        "iv": ClauseResult(ClauseStatus.UNCHECKED, {"reason": "cited but never stated"}),
    }
    return CutsetLemmaReport(k=k, components=len(cls.components), clauses=clauses)
