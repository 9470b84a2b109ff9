"""Generalized K_{1,2s}-matchings centred at the components of G - S."""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..config import get_settings
from ..graph import Graph, components, iter_bits, members, neighbors_in, popcount, vset
from ..invariants import require_cutset
from ..monitoring.logger import get_logger
from ..utils.errors import ConstructionError, PreconditionError
from .flow import DeficientSet, star_matching

logger = get_logger(__name__)


@dataclass(frozen=True)
class ComponentPartition:
    """Bipartitions {D1, D2} of a component and {W1, W2} of its attachment set."""

    d1: int
    d2: int
    w1: int
    w2: int


@dataclass(frozen=True)
class ComponentPartners:
    """Partners of one component.

    ``partner_split`` is (Y1, Y2) with |Y1| = |Y2| = s. ``centers`` is the
    matching (X1, X2) bipartition of the component, None when it is trivial.
    """

    component: int
    partners: int
    partner_split: Tuple[int, int]
    centers: Optional[Tuple[int, int]]


@dataclass(frozen=True)
class GeneralizedStarMatching:
    s: int
    entries: Tuple[ComponentPartners, ...]

    def entry_for(self, vertex: int) -> ComponentPartners:
        """The entry whose component contains ``vertex``."""
        for entry in self.entries:
            if entry.component >> vertex & 1:
                return entry
        raise KeyError(vertex)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "components": [
                {
                    "component": members(e.component),
                    "partners": members(e.partners),
                    "y1": members(e.partner_split[0]),
                    "y2": members(e.partner_split[1]),
                    "x1": None if e.centers is None else members(e.centers[0]),
                    "x2": None if e.centers is None else members(e.centers[1]),
                }
                for e in self.entries
            ],
        }


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str = ""
    detail: Optional[Dict[str, Any]] = None


def _split_attachments(g: Graph, d1: int, d2: int, w: int, s: int) -> Optional[Tuple[int, int]]:
    """Best W split for a fixed component bipartition, or None if min side < 2s."""
    only1 = only2 = both = 0
    for x in iter_bits(w):
        sees1, sees2 = bool(g.adj[x] & d1), bool(g.adj[x] & d2)
        if sees1 and sees2:
            both |= 1 << x
        elif sees1:
            only1 |= 1 << x
        elif sees2:
            only2 |= 1 << x
        else:
            return None
    a, b, c = popcount(only1), popcount(only2), popcount(both)
    if a + c < 2 * s or b + c < 2 * s:
        return None
    take = max(0, 2 * s - a)
    shared = members(both)
    w1 = only1 | vset(*shared[:take])
    return w1, w & ~w1


def _shortfall(g: Graph, d1: int, d2: int, w: int, s: int) -> int:
    a = popcount(vset(*(x for x in iter_bits(w) if g.adj[x] & d1)))
    b = popcount(vset(*(x for x in iter_bits(w) if g.adj[x] & d2)))
    return max(0, 2 * s - a) + max(0, 2 * s - b)


def _disjoint_edges(g: Graph, d: int, w: int) -> List[Tuple[int, int]]:
    """Maximum set of disjoint D-W edges, as (d, w) pairs sorted by d."""
    bip = nx.Graph()
    left = [("d", v) for v in iter_bits(d)]
    bip.add_nodes_from(left)
    bip.add_nodes_from(("w", x) for x in iter_bits(w))
    for v in iter_bits(d):
        for x in iter_bits(g.adj[v] & w):
            bip.add_edge(("d", v), ("w", x))
    matching = nx.bipartite.hopcroft_karp_matching(bip, top_nodes=left)
    return sorted((v, matching[("d", v)][1]) for _, v in left if ("d", v) in matching)


def balance_component_partition(
    g: Graph, d: int, w: int, s: int, exhaustive_limit: Optional[int] = None
) -> ComponentPartition:
    """
    Bipartition a nontrivial component so both halves attach to at least 2s of W.

    Tries 4s disjoint D-W edges first, then single-vertex moves from an
    alternating start, then every bipartition when |D| is small.

    Args:
        g: Host graph
        d: Nontrivial component of G - S
        w: Its attachment set N_S(D), |W| >= 4s
        s: Half the partner count
        exhaustive_limit: Largest |D| for the exhaustive fallback

    Returns:
        ComponentPartition with W1 in N(D1), W2 in N(D2), both of size >= 2s

    Raises:
        PreconditionError: D trivial, W too small, or W not attached to D
        ConstructionError: no balanced bipartition exists
    """
    if popcount(d) < 2:
        raise PreconditionError(
            "nontrivial_component", "balancing needs a component with two or more vertices"
        )
    if popcount(w) < 4 * s:
        raise PreconditionError("attachment_size", f"|W| = {popcount(w)} < 4s = {4 * s}")
    if any(not g.adj[x] & d for x in iter_bits(w)):
        raise PreconditionError("attachment_subset", "every vertex of W must have a neighbour in D")
    limit = exhaustive_limit
    if limit is None:
        limit = get_settings().balance_exhaustive_max_d

    def finish(d1: int) -> Optional[ComponentPartition]:
        d2 = d & ~d1
        if not d1 or not d2:
            return None
        split = _split_attachments(g, d1, d2, w, s)
        return None if split is None else ComponentPartition(d1, d2, split[0], split[1])

    if popcount(d) >= 4 * s:
        edges = _disjoint_edges(g, d, w)
        if len(edges) >= 4 * s:
            ends = [v for v, _ in edges[: 4 * s]]
            d2 = vset(*ends[2 * s :])
            found = finish(d & ~d2)
            if found is not None:
                return found

    order = members(d)
    d1 = vset(*order[0::2])
    current = _shortfall(g, d1, d & ~d1, w, s)
    improved = True
    while current and improved:
        improved = False
        for v in order:
            trial = d1 ^ (1 << v)
            if not trial or trial == d:
                continue
            score = _shortfall(g, trial, d & ~trial, w, s)
            if score < current:
                d1, current, improved = trial, score, True
                break
    found = finish(d1)
    if found is not None:
        return found

    if len(order) <= limit:
        anchor = 1 << order[0]
        rest = order[1:]
        for size in range(0, len(rest)):
            for extra in combinations(rest, size):
                found = finish(anchor | vset(*extra))
                if found is not None:
                    logger.debug("balance_exhaustive", component=order, s=s)
                    return found
    raise ConstructionError(
        "balance_component_partition",
        "no bipartition gives both sides 2s attachments",
        {"component": order, "attachments": members(w), "s": s},
    )


def generalized_matching(
    g: Graph, s_set: int, s: int, min_components: int = 5
) -> GeneralizedStarMatching:
    """
    Build a generalized K_{1,2s}-matching centred at the components of G - S.

    Each trivial component {v} is one centre of demand 2s whose leaves are
    split afterwards; each nontrivial one is balanced into two halves whose
    attachment sets become the centres. One star matching with f = s then
    assigns disjoint partners.

    Args:
        g: Host graph
        s_set: Cutset S
        s: Partners per side
        min_components: Required w(G - S); 2 gives the s = 1 corollary regime

    Returns:
        GeneralizedStarMatching

    Raises:
        PreconditionError: one of the resource conditions fails; ``condition``
            names it
        ConstructionError: the star matching found a deficient set
    """
    if s < 1:
        raise PreconditionError("positive_s", "s must be at least 1")
    require_cutset(g, s_set, "generalized_matching")
    comps = components(g, s_set)
    if len(comps) < min_components:
        raise PreconditionError("component_count", f"w(G - S) = {len(comps)} < {min_components}")
    if popcount(s_set) < 2 * s * len(comps):
        raise PreconditionError(
            "partner_supply", f"|S| = {popcount(s_set)} < 2s * w = {2 * s * len(comps)}"
        )

    centers: List[Tuple[int, str]] = []
    demand: Dict[Tuple[int, str], int] = {}
    adjacency: Dict[Tuple[int, str], List[int]] = {}
    halves: Dict[int, Optional[Tuple[int, int]]] = {}
    for i, comp in enumerate(comps):
        attach = neighbors_in(g, s_set, comp)
        if popcount(attach) < 4 * s:
            raise PreconditionError(
                "component_attachment",
                f"|N_S(D)| = {popcount(attach)} < 4s for component {members(comp)}",
                witness=members(comp),
            )
        if popcount(comp) == 1:
            adjacency[(i, "v")] = members(attach)
            demand[(i, "v")] = 2 * s
            centers.append((i, "v"))
            halves[i] = None
            continue
        part = balance_component_partition(g, comp, attach, s)
        adjacency[(i, "a")] = members(neighbors_in(g, s_set, part.d1))
        adjacency[(i, "b")] = members(neighbors_in(g, s_set, part.d2))
        demand[(i, "a")] = demand[(i, "b")] = s
        halves[i] = (part.d1, part.d2)
        centers += [(i, "a"), (i, "b")]

    result = star_matching(centers, members(s_set), adjacency, demand)
    if isinstance(result, DeficientSet):
        raise ConstructionError(
            "generalized_matching",
            "partner assignment violates the Hall condition",
            {"deficient": [list(c) for c in result.members], "neighbors": result.neighborhood_size},
        )
    entries = []
    for i, comp in enumerate(comps):
        if halves[i] is None:
            leaves = result.leaves((i, "v"))
            y1, y2 = vset(*leaves[:s]), vset(*leaves[s:])
        else:
            y1 = vset(*result.leaves((i, "a")))
            y2 = vset(*result.leaves((i, "b")))
        entries.append(ComponentPartners(comp, y1 | y2, (y1, y2), halves[i]))
    logger.debug("generalized_matching_built", components=len(comps), s=s)
    return GeneralizedStarMatching(s, tuple(entries))


def validate_generalized_matching(
    g: Graph, s_set: int, m: GeneralizedStarMatching
) -> ValidationResult:
    """Recheck every structural condition of a generalized matching from scratch."""
    comps = components(g, s_set)
    if sorted(e.component for e in m.entries) != sorted(comps):
        return ValidationResult(False, "components")
    used = 0
    for e in m.entries:
        if popcount(e.partners) != 2 * m.s:
            return ValidationResult(False, "partner count", {"component": members(e.component)})
        if e.partners & used:
            return ValidationResult(False, "disjointness", {"shared": members(e.partners & used)})
        used |= e.partners
    for e in m.entries:
        if e.partners & ~neighbors_in(g, s_set, e.component):
            return ValidationResult(False, "partner adjacency", {"component": members(e.component)})
        y1, y2 = e.partner_split
        if y1 & y2 or y1 | y2 != e.partners:
            return ValidationResult(False, "partner partition", {"component": members(e.component)})
        if popcount(e.component) < 2:
            continue
        if e.centers is None:
            return ValidationResult(False, "center partition", {"component": members(e.component)})
        x1, x2 = e.centers
        if not x1 or not x2 or x1 & x2 or x1 | x2 != e.component:
            return ValidationResult(False, "center partition", {"component": members(e.component)})
        if popcount(y1) != m.s or popcount(y2) != m.s:
            return ValidationResult(False, "partition size", {"component": members(e.component)})
        for ys, xs in ((y1, x1), (y2, x2)):
            for y in iter_bits(ys):
                if not g.adj[y] & xs:
                    detail = {"partner": y, "center": members(xs)}
                    return ValidationResult(False, "containment", detail)
    return ValidationResult(True)
