"""Hamiltonian cycles around a cutset with at least five complete components."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..graph import Cycle, Graph, components, is_complete, iter_bits, lowest, members, popcount
from ..invariants import (
    Rational,
    as_rational,
    exceeds_insertion_threshold,
    is_proper_cutset,
    require_cutset,
)
from ..matching import generalized_matching
from ..monitoring.logger import get_logger
from ..oracle import validate_cycle
from ..paths import SpliceLog, insert_vertex
from ..patterns import is_p3_kp1_free
from ..utils.errors import AnomalyError, ConstructionError, HypothesisError, PreconditionError
from ..utils.helpers import format_rational
from .gluing import route_clique

logger = get_logger(__name__)

ASSEMBLY_MIN_T: Rational = Fraction(8)
CHAIN_SEARCH_BUDGET = 100_000


@dataclass
class AssemblyOutcome:
    """Result of an assembly run: the cycle, or the step and missing edge that stopped it."""

    cycle: Optional[Cycle]
    steps: List[str] = field(default_factory=list)
    log: Optional[SpliceLog] = None
    missing_edge: Optional[Tuple[int, int]] = None
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cycle": None if self.cycle is None else list(self.cycle.verts),
            "steps": list(self.steps),
            "missing_edge": None if self.missing_edge is None else list(self.missing_edge),
            "reason": self.reason,
        }


def _check_hypotheses(g: Graph, s_set: int, t: Rational, check_freeness: bool) -> None:
    if t < ASSEMBLY_MIN_T:
        raise HypothesisError(
            "toughness_threshold", f"t={format_rational(t)} is below {ASSEMBLY_MIN_T}"
        )
    if check_freeness:
        free, witness = is_p3_kp1_free(g, 3)
        if not free:
            raise HypothesisError(
                "p3_3p1_free", "graph contains an induced P3 u 3P1", witness=witness.to_list()
            )
    require_cutset(g, s_set, "assemble_lemma27")
    if not is_proper_cutset(g, s_set):
        raise HypothesisError(
            "proper_cutset", "some vertex of S sees fewer than two components of G - S"
        )
    comps = components(g, s_set)
    if len(comps) < 5:
        raise HypothesisError("component_count", f"w(G - S) = {len(comps)} < 5")
    if sum(1 for c in comps if popcount(c) >= 2) < 3:
        raise HypothesisError(
            "nontrivial_components", "G - S has fewer than three nontrivial components"
        )
    outside = g.vertices & ~s_set
    for x in iter_bits(s_set):
        if not exceeds_insertion_threshold(popcount(g.adj[x] & outside), g.n, t):
            raise HypothesisError(
                "cutset_degree",
                f"vertex {x} has at most n/(t+1) - 1 neighbours in G - S",
                witness=x,
            )
    for c in comps:
        if not is_complete(g, c):
            raise AnomalyError(
                "assemble_lemma27",
                "a component of G - S is not complete",
                {"component": members(c)},
            )


def _longest_chain(g: Graph, comps: Sequence[int], connectors: Sequence[int]) -> List[int]:
    """
    Longest cyclic order of components, each entered next to the previous connector.

    Component c is traversed from a neighbour of the connector before it to
    a neighbour of its own connector. Orders start at their smallest index;
    among longest orders the first found (lexicographically least) wins.
    """
    ell = len(comps)

    def feasible(p: int, c: int) -> bool:
        return route_clique(comps[c], g.adj[connectors[p]], g.adj[connectors[c]]) is not None

    best: List[int] = []
    visited = 0

    def search(seq: List[int], used: int) -> bool:
        nonlocal best, visited
        visited += 1
        if visited > CHAIN_SEARCH_BUDGET:
            return True
        closes = feasible(seq[-1], seq[0]) and (len(seq) >= 2 or popcount(comps[seq[0]]) >= 2)
        if closes and len(seq) > len(best):
            best = list(seq)
            if len(best) == ell:
                return True
        for c in range(seq[0] + 1, ell):
            if not used >> c & 1 and feasible(seq[-1], c):
                seq.append(c)
                if search(seq, used | 1 << c):
                    return True
                seq.pop()
        return False

    for first in range(ell):
        if search([first], 1 << first):
            break
    return best


def _chain_cycle(
    g: Graph, comps: Sequence[int], connectors: Sequence[int], chain: Sequence[int]
) -> Cycle:
    verts: List[int] = []
    for i, c in enumerate(chain):
        prev = chain[i - 1]
        route = route_clique(comps[c], g.adj[connectors[prev]], g.adj[connectors[c]])
        verts += [*route, connectors[c]]
    return Cycle(verts)


def insert_component(
    g: Graph, log: SpliceLog, comp: int, x: int, y: int, connectors: int, free: int
) -> Optional[str]:
    """
    Route the complete component ``comp`` into the current cycle of ``log``.

    Forms, in order: replace a connector c between p and q by the detour
    p, x, comp, y, q (either orientation), dropping c; open a cycle edge pq
    into p, x, comp, y, q; open pq through two free vertices r1, r2 instead
    of x and y.

    Args:
        g: Host graph
        log: Splice log whose current cycle is extended
        comp: Complete component off the cycle
        x: First partner of comp
        y: Second partner of comp
        connectors: Cycle vertices that may be dropped
        free: Off-cycle vertices usable as ends

    Returns:
        The form used, or None when no form applies
    """
    cycle = log.current
    verts = cycle.verts
    size = len(verts)
    for i, mid in enumerate(verts):
        if not connectors >> mid & 1:
            continue
        p, q = verts[i - 1], verts[(i + 1) % size]
        for a, b in ((x, y), (y, x)):
            if g.has_edge(p, a) and g.has_edge(b, q):
                route = route_clique(comp, g.adj[a], g.adj[b])
                if route is not None:
                    log.apply((p, mid, q), (p, a, *route, b, q), "replace_connector")
                    return "replace_connector"
    for i, p in enumerate(verts):
        q = verts[(i + 1) % size]
        for a, b in ((x, y), (y, x)):
            if g.has_edge(p, a) and g.has_edge(b, q):
                route = route_clique(comp, g.adj[a], g.adj[b])
                if route is not None:
                    log.apply((p, q), (p, a, *route, b, q), "partner_ear")
                    return "partner_ear"
    touching = [r for r in iter_bits(free) if g.adj[r] & comp]
    for i, p in enumerate(verts):
        q = verts[(i + 1) % size]
        for r1 in touching:
            if not g.has_edge(p, r1):
                continue
            for r2 in touching:
                if r2 == r1 or not g.has_edge(r2, q):
                    continue
                route = route_clique(comp, g.adj[r1], g.adj[r2])
                if route is not None:
                    log.apply((p, q), (p, r1, *route, r2, q), "free_ear")
                    return "free_ear"
    return None


def _missing_edge(g: Graph, cycle: Cycle, x: int, y: int, connectors: int) -> Tuple[int, int]:
    """The first adjacency the connector replacement needed and did not find."""
    verts = cycle.verts
    for i, mid in enumerate(verts):
        if connectors >> mid & 1:
            p, q = verts[i - 1], verts[(i + 1) % len(verts)]
            return (p, x) if not g.has_edge(p, x) else (y, q)
    return (verts[0], x)


def assemble_lemma27(g: Graph, s_set: int, t: Any, check_freeness: bool = True) -> AssemblyOutcome:
    """
    Build a hamiltonian cycle around a cutset S with many complete components.

    A generalized K_{1,2}-matching gives each component D_i partners x_i and
    y_i. The longest cyclic chain D_i, y_i, D_j, y_j, ... forms the first
    cycle; each component left out is routed in by replacing a connector
    (or opening an edge), and the S vertices still off the cycle are
    inserted one at a time.

    Args:
        g: Host graph
        s_set: Proper cutset S
        t: Toughness of g, at least 8
        check_freeness: Search for an induced P3 u 3P1 first

    Returns:
        AssemblyOutcome; a None cycle carries the step that failed and,
        when a needed adjacency was absent, the missing edge

    Raises:
        HypothesisError: a hypothesis fails
        AnomalyError: a component of G - S is not complete, or the final
            cycle fails validation
    """
    t_value = as_rational(t)
    _check_hypotheses(g, s_set, t_value, check_freeness)
    steps: List[str] = ["hypotheses"]
    try:
        gm = generalized_matching(g, s_set, 1, min_components=5)
    except (PreconditionError, ConstructionError) as e:
        logger.info("assembly_failed", step="generalized_matching", error=str(e))
        return AssemblyOutcome(None, steps, reason=f"generalized_matching: {e}")
    steps.append("generalized_matching")

    entries = sorted(gm.entries, key=lambda e: lowest(e.component))
    comps = [e.component for e in entries]
    firsts = [lowest(e.partner_split[0]) for e in entries]
    connectors = [lowest(e.partner_split[1]) for e in entries]

    chain = _longest_chain(g, comps, connectors)
    if not chain:
        logger.info("assembly_failed", step="chain")
        return AssemblyOutcome(None, steps, reason="chain")
    log = SpliceLog(_chain_cycle(g, comps, connectors, chain))
    steps.append(f"chain:{len(chain)}")

    omitted = [i for i in range(len(comps)) if i not in chain]
    if omitted:
        steps.append(f"case_l_minus_{len(omitted)}")
    reserved = 0
    for i in omitted:
        reserved |= 1 << firsts[i] | 1 << connectors[i]
    droppable = 0
    for c in chain:
        droppable |= 1 << connectors[c]
    for i in omitted:
        own = 1 << firsts[i] | 1 << connectors[i]
        reserved &= ~own
        on_cycle = log.current.vertex_set
        free = s_set & ~on_cycle & ~reserved & ~own
        movable = droppable & on_cycle
        form = insert_component(g, log, comps[i], firsts[i], connectors[i], movable, free)
        if form is None:
            missing = _missing_edge(g, log.current, firsts[i], connectors[i], movable)
            logger.info(
                "assembly_failed",
                step="insert_component",
                component=members(comps[i]),
                missing_edge=missing,
            )
            return AssemblyOutcome(None, steps, log, missing, reason="insert_component")
        droppable |= own
        steps.append(f"insert_component:{form}")

    cycle = log.current
    for x in iter_bits(s_set & ~cycle.vertex_set):
        try:
            cycle = insert_vertex(g, cycle, x, t_value, tough=True, log=log)
        except (PreconditionError, ConstructionError) as e:
            logger.info("assembly_failed", step="insert_vertex", vertex=x, error=str(e))
            return AssemblyOutcome(None, steps, log, reason=f"insert_vertex: {e}")
    steps.append("insert_vertices")
    if not validate_cycle(g, cycle):
        raise AnomalyError(
            "assemble_lemma27", "assembled cycle fails validation", {"cycle": list(cycle.verts)}
        )
    logger.debug("assembled", chain=len(chain), omitted=len(omitted), steps=len(log.steps))
    return AssemblyOutcome(cycle, steps, log)
