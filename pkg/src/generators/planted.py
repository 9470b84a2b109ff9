"""Instances built to satisfy a chosen lemma's hypotheses, with the planted witnesses."""

from typing import Any, Callable, Dict, List, Optional, Sequence

from ..graph import Graph, cycle_graph, vset
from ..utils.errors import PreconditionError
from .certified import CertifiedGraph, certify_brute_force
from .families import clique_join

PLANTED_KINDS = ("lemma27", "lemma23", "claim1", "deficiency", "insertion")


def _lemma27(components: Optional[Sequence[int]] = None, s_size: int = 75) -> CertifiedGraph:
    """A dominating clique S joined to complete components, at least 5 of them and 3 nontrivial."""
    sizes = list(components) if components is not None else [3, 3, 3, 1, 1]
    if len(sizes) < 5:
        raise PreconditionError(
            "lemma27_components", f"need at least 5 components, got {len(sizes)}"
        )
    if sum(1 for c in sizes if c >= 2) < 3:
        raise PreconditionError("lemma27_nontrivial", "need at least 3 nontrivial components")
    if s_size < 1:
        raise PreconditionError("lemma27_cutset", "S must be nonempty")
    return clique_join(s_size, sizes)


def _lemma23(ell: int = 5, s: int = 1, s_size: Optional[int] = None) -> CertifiedGraph:
    """l trivial components under a dominating S; feasible when |S| >= 2 s l and |S| >= 4 s."""
    size = 20 * s if s_size is None else s_size
    if ell < 5:
        raise PreconditionError("lemma23_components", f"need at least 5 components, got {ell}")
    if s < 1 or size < 2 * s * ell or size < 4 * s:
        raise PreconditionError(
            "lemma23_infeasible", f"|S|={size} is below 2*s*l={2 * s * ell} for s={s}, l={ell}"
        )
    built = clique_join(size, [1] * ell)
    return CertifiedGraph(
        built.graph,
        built.toughness_bound,
        built.provenance,
        built.freeness_k,
        built.freeness_verified,
        {**built.planted, "s": s},
    )


def _claim1(clique: int = 45, big: int = 92, small: Sequence[int] = (3, 3)) -> CertifiedGraph:
    """K_m joined to one large clique and two small ones; the large one holds Q1."""
    if len(small) != 2 or big <= 2 * clique:
        raise PreconditionError(
            "claim1_shape", "need two small cliques and |Q1| > 2|S| so that |Q1| - 2|N(Q1)| >= 2"
        )
    built = clique_join(clique, [big, *small])
    planted = {**built.planted, "Q1": built.planted["components"][0]}
    return CertifiedGraph(
        built.graph,
        built.toughness_bound,
        built.provenance,
        built.freeness_k,
        built.freeness_verified,
        planted,
    )


def _deficiency(
    q: int = 4, attachments: Optional[Sequence[Sequence[int]]] = None
) -> CertifiedGraph:
    """A clique Q1 on 0..q-1 plus outside vertices, each seeing the listed Q1 vertices.

    Outside vertices form a clique among themselves.
    """
    seen: List[Sequence[int]] = list(attachments) if attachments is not None else [[0]]
    if q < 1 or any(not 0 <= v < q for row in seen for v in row):
        raise PreconditionError("deficiency_shape", "attachments must name vertices of Q1")
    n = q + len(seen)
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)]
    edges += [(q + i, q + j) for i in range(len(seen)) for j in range(i + 1, len(seen))]
    edges += [(v, q + i) for i, row in enumerate(seen) for v in row]
    g = Graph.from_edges(n, edges)
    cert = certify_brute_force(g)
    planted = {"Q1": (1 << q) - 1, "outside": ((1 << len(seen)) - 1) << q}
    return CertifiedGraph(g, cert.toughness_bound, cert.provenance, cert.freeness_k, True, planted)


def _insertion(rim: int = 6) -> CertifiedGraph:
    """A rim cycle 0..m-1 with chord 1-3 and x = m adjacent to 0 and 2.

    x has no two consecutive rim neighbours, so inserting it takes the
    successor chord 1-3.
    """
    if rim < 5:
        raise PreconditionError("insertion_rim", "the rim needs at least 5 vertices")
    base = cycle_graph(rim)
    x = rim
    g = Graph.from_edges(rim + 1, base.edges() + [(1, 3), (x, 0), (x, 2)])
    cert = certify_brute_force(g)
    planted = {"cycle": list(range(rim)), "vertex": x, "chord": (1, 3), "neighbors": vset(0, 2)}
    return CertifiedGraph(g, cert.toughness_bound, cert.provenance, cert.freeness_k, True, planted)


_BUILDERS: Dict[str, Callable[..., CertifiedGraph]] = {
    "lemma27": _lemma27,
    "lemma23": _lemma23,
    "claim1": _claim1,
    "deficiency": _deficiency,
    "insertion": _insertion,
}


def planted_lemma_instance(kind: str, **params: Any) -> CertifiedGraph:
    """
    Build an instance satisfying a lemma's hypotheses by construction.

    Args:
        kind: One of lemma27, lemma23, claim1, deficiency, insertion
        **params: Builder parameters (see each builder)

    Returns:
        CertifiedGraph whose ``planted`` dict holds the planted witnesses
        (S, components, Q1, cycle, ...)

    Raises:
        PreconditionError: unknown kind or infeasible parameters
    """
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise PreconditionError(
            "planted_kind", f"unknown kind {kind!r}; known: {list(PLANTED_KINDS)}"
        ) from None
    return builder(**params)
