"""Graphs carrying a toughness certificate and a freeness record."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from ..graph import Graph
from ..invariants import Rational, toughness
from ..patterns import is_p3_kp1_free
from ..utils.errors import PreconditionError
from ..utils.helpers import format_rational

BRUTE_FORCE_MAX_N = 18
PATTERN_CHECK_MAX_N = 60


class ProvenanceKind(str, Enum):
    BRUTE_FORCE = "brute_force"
    FAMILY_FORMULA = "family_formula"


@dataclass(frozen=True)
class Provenance:
    kind: ProvenanceKind
    name: Optional[str] = None

    def label(self) -> str:
        return self.kind.value if self.name is None else f"{self.kind.value}:{self.name}"


@dataclass(frozen=True)
class CertifiedGraph:
    """A graph with its toughness, how that value is known, and its freeness.

    ``freeness_k`` is the smallest k for which (P3 u kP1)-freeness was
    established, or None when the graph is not known to be free for any k
    the builder tried. ``freeness_verified`` is False when freeness rests on
    the family's structure instead of a pattern search.
    """

    graph: Graph
    toughness_bound: Rational
    provenance: Provenance
    freeness_k: Optional[int]
    freeness_verified: bool = True
    planted: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.provenance.kind == ProvenanceKind.BRUTE_FORCE and self.graph.n > BRUTE_FORCE_MAX_N:
            raise PreconditionError(
                "brute_force_size",
                f"brute-force certificates are limited to n <= {BRUTE_FORCE_MAX_N}",
            )

    def is_free_for(self, k: int) -> bool:
        """(P3 u kP1)-freeness implied by the recorded k."""
        return self.freeness_k is not None and self.freeness_k <= k

    def reverify(self) -> bool:
        """Recheck freeness by pattern search and brute-force toughness where applicable."""
        if self.freeness_k is not None and self.graph.n <= PATTERN_CHECK_MAX_N:
            free, _ = is_p3_kp1_free(self.graph, self.freeness_k)
            if not free:
                return False
        if self.provenance.kind == ProvenanceKind.BRUTE_FORCE:
            return toughness(self.graph, limit=BRUTE_FORCE_MAX_N).value == self.toughness_bound
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.graph.n,
            "toughness": format_rational(self.toughness_bound),
            "provenance": self.provenance.label(),
            "freeness_k": self.freeness_k,
            "freeness_verified": self.freeness_verified,
        }


def certify_brute_force(g: Graph, max_k: int = 3) -> CertifiedGraph:
    """
    Certify a small graph by exact toughness and the least k it is free for.

    Args:
        g: Graph with n <= 18
        max_k: Largest k tried for freeness

    Returns:
        CertifiedGraph with BRUTE_FORCE provenance
    """
    cert = toughness(g, limit=BRUTE_FORCE_MAX_N)
    freeness_k = next((k for k in range(0, max_k + 1) if is_p3_kp1_free(g, k)[0]), None)
    return CertifiedGraph(g, cert.value, Provenance(ProvenanceKind.BRUTE_FORCE), freeness_k)
