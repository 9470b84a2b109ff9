"""Checked inputs of the hamiltonicity construction."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from ..generators import CertifiedGraph, ProvenanceKind
from ..graph import Graph, is_complete
from ..invariants import INFINITY, Rational, ToughnessCertificate, as_rational, toughness
from ..patterns import is_p3_kp1_free
from ..utils.errors import HypothesisError
from ..utils.helpers import format_rational

TOUGHNESS_THRESHOLD: Rational = Fraction(15)


class EvidenceKind(str, Enum):
    COMPUTED = "computed"
    ANALYTIC = "analytic"


@dataclass(frozen=True)
class ToughnessEvidence:
    """How the toughness lower bound is known.

    COMPUTED evidence carries the exact certificate; ANALYTIC evidence is a
    family formula identified by ``provenance``.
    """

    kind: EvidenceKind
    value: Rational
    provenance: str
    certificate: Optional[ToughnessCertificate] = None

    def label(self) -> str:
        return f"{self.kind.value}:{self.provenance}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "value": format_rational(self.value),
            "provenance": self.provenance,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


@dataclass(frozen=True)
class TheoremInstance:
    """A graph together with evidence that it is t-tough and (P3 u 3P1)-free."""

    g: Graph
    t: Rational
    evidence: ToughnessEvidence
    freeness_verified: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", as_rational(self.t))
        if self.g.n < 3:
            raise HypothesisError("order", f"need n >= 3, got n={self.g.n}")
        if self.t < TOUGHNESS_THRESHOLD:
            raise HypothesisError(
                "toughness_threshold",
                f"t={format_rational(self.t)} is below {format_rational(TOUGHNESS_THRESHOLD)}",
            )
        if self.evidence.value < self.t:
            raise HypothesisError(
                "toughness_certificate",
                f"certified toughness {format_rational(self.evidence.value)}"
                f" is below t={format_rational(self.t)}",
            )
        if not self.freeness_verified:
            raise HypothesisError("p3_3p1_free", "(P3 u 3P1)-freeness is not established")

    @classmethod
    def from_graph(cls, g: Graph, t: Any = TOUGHNESS_THRESHOLD) -> "TheoremInstance":
        """
        Check both hypotheses directly on g.

        Complete graphs are certified without search; any other graph needs
        exact toughness, so it must lie inside the toughness envelope.

        Raises:
            HypothesisError: a hypothesis fails, with the pattern witness or tough set
            SizeLimitError: g is noncomplete and beyond exact toughness
        """
        free, witness = is_p3_kp1_free(g, 3)
        if not free:
            raise HypothesisError(
                "p3_3p1_free", "graph contains an induced P3 u 3P1", witness=witness.to_list()
            )
        if is_complete(g):
            cert = ToughnessCertificate(INFINITY, None, 1, 1)
        else:
            cert = toughness(g)
            if cert.value < as_rational(t):
                raise HypothesisError(
                    "toughness_certificate",
                    f"tau={format_rational(cert.value)} is below t={t}",
                    witness=cert.to_dict()["tough_set"],
                )
        evidence = ToughnessEvidence(EvidenceKind.COMPUTED, cert.value, "exact", cert)
        return cls(g, t, evidence, True)

    @classmethod
    def from_certified(cls, cg: CertifiedGraph, t: Any = TOUGHNESS_THRESHOLD) -> "TheoremInstance":
        """Trust a certified graph's toughness bound and freeness record."""
        kind = EvidenceKind.ANALYTIC
        if cg.provenance.kind == ProvenanceKind.BRUTE_FORCE:
            kind = EvidenceKind.COMPUTED
        evidence = ToughnessEvidence(kind, cg.toughness_bound, cg.provenance.label())
        return cls(cg.graph, t, evidence, cg.is_free_for(3))
