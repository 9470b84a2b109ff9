"""Structured families with closed-form toughness."""

from fractions import Fraction
from typing import Callable, Dict, Sequence

from ..graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    complete_multipartite_edges,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
    petersen_graph,
    star_graph,
    wheel_graph,
)
from ..invariants import INFINITY, Rational
from ..monitoring.logger import get_logger
from ..patterns import is_p3_kp1_free
from ..utils.errors import AnomalyError, PreconditionError
from .certified import PATTERN_CHECK_MAX_N, CertifiedGraph, Provenance, ProvenanceKind

logger = get_logger(__name__)


def multipartite_toughness(parts: Sequence[int]) -> Rational:
    """(N - n_max) / n_max; complete graphs are infinitely tough, a lone part of size >= 2 is 0."""
    if not parts or any(p < 1 for p in parts):
        raise PreconditionError("parts", "part sizes must be positive")
    largest = max(parts)
    if largest == 1:
        return INFINITY
    if len(parts) == 1:
        return Fraction(0)
    return Fraction(sum(parts) - largest, largest)


def clique_join_toughness(clique: int, parts: Sequence[int]) -> Rational:
    """m / l for K_m joined to l >= 2 disjoint cliques."""
    if len(parts) < 2:
        return INFINITY
    if clique == 0:
        return Fraction(0)
    return Fraction(clique, len(parts))


def _checked_free(g: Graph, family: str) -> bool:
    """Pattern-check (P3 u P1)-freeness up to the envelope, else rely on the family structure."""
    if g.n > PATTERN_CHECK_MAX_N:
        logger.info("freeness_structural", family=family, n=g.n)
        return False
    free, witness = is_p3_kp1_free(g, 1)
    if not free:
        raise AnomalyError(
            f"{family}_freeness", "family member contains P3 u P1", {"witness": witness.to_list()}
        )
    return True


def complete_multipartite(parts: Sequence[int]) -> CertifiedGraph:
    """
    K_{parts} with its formula toughness.

    Complete multipartite graphs are (P3 u P1)-free: an induced P3 spans two
    parts and every other vertex sees one of its ends.

    Args:
        parts: Part sizes, all positive

    Returns:
        CertifiedGraph with FAMILY_FORMULA provenance and freeness_k = 1
    """
    value = multipartite_toughness(parts)
    n, edges = complete_multipartite_edges(parts)
    g = Graph.from_edges(n, edges)
    verified = _checked_free(g, "complete_multipartite")
    return CertifiedGraph(
        g,
        value,
        Provenance(ProvenanceKind.FAMILY_FORMULA, "complete_multipartite"),
        1,
        freeness_verified=verified,
        planted={"parts": list(parts)},
    )


def clique_join(clique: int, parts: Sequence[int]) -> CertifiedGraph:
    """
    K_m joined to the disjoint union of K_{c1}, ..., K_{cl}.

    The clique occupies vertices 0..m-1; the parts follow in order. Every
    induced P3 has its centre in K_m, so the graph is (P3 u P1)-free.

    Returns:
        CertifiedGraph with the join's vertex blocks under ``planted``
    """
    if clique < 0 or not parts or any(p < 1 for p in parts):
        raise PreconditionError("parts", "clique size must be >= 0 and part sizes positive")
    g = join(complete_graph(clique), disjoint_union(complete_graph(p) for p in parts))
    blocks = []
    offset = clique
    for size in parts:
        blocks.append(((1 << size) - 1) << offset)
        offset += size
    verified = _checked_free(g, "clique_join")
    return CertifiedGraph(
        g,
        clique_join_toughness(clique, parts),
        Provenance(ProvenanceKind.FAMILY_FORMULA, "clique_join"),
        1,
        freeness_verified=verified,
        planted={"S": (1 << clique) - 1, "components": blocks},
    )


NAMED_GRAPHS: Dict[str, Callable[[int], Graph]] = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
    "wheel": wheel_graph,
    "empty": empty_graph,
    "petersen": lambda _n: petersen_graph(),
    "complete_bipartite": lambda n: complete_bipartite(n // 2, n - n // 2),
}


def named_graph(name: str, n: int = 0) -> Graph:
    """Build a named graph; ``n`` is the order, or the leaf/rim count for stars and wheels."""
    try:
        builder = NAMED_GRAPHS[name]
    except KeyError:
        known = sorted(NAMED_GRAPHS)
        raise PreconditionError("graph_name", f"unknown graph {name!r}; known: {known}") from None
    return builder(n)
