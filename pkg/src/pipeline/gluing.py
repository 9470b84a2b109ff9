"""Closing a hamiltonian cycle through the complete component D1*."""

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.bipartite import hopcroft_karp_matching

from ..config import get_settings
from ..graph import (
    Cycle,
    Graph,
    Path,
    components,
    induced,
    is_complete,
    iter_bits,
    lowest,
    members,
    popcount,
)
from ..monitoring.logger import get_logger
from ..oracle import min_path_cover_oracle, validate_cycle
from ..paths import min_path_cover_p32p1free
from ..utils.errors import PreconditionError, ToughHamError

logger = get_logger(__name__)


@dataclass(frozen=True)
class GlueOutcome:
    """A cycle, or the reason none was closed."""

    cycle: Optional[Cycle]
    reason: str = ""
    details: Dict[str, Any] = field(default_factory=dict)


def _assign(slots: Dict[Hashable, int]) -> Optional[Dict[Hashable, int]]:
    """Distinct vertices for every slot, each from its candidate set, or None."""
    if not slots:
        return {}
    # integer nodes: slot i is i, vertex v is offset + v
    keys = list(slots)
    offset = len(keys)
    net = nx.Graph()
    net.add_nodes_from(range(offset))
    for i, key in enumerate(keys):
        for v in iter_bits(slots[key]):
            net.add_edge(i, offset + v)
    matching = hopcroft_karp_matching(net, top_nodes=range(offset))
    if any(i not in matching for i in range(offset)):
        return None
    return {key: matching[i] - offset for i, key in enumerate(keys)}


def _cover_component(g: Graph, comp: int) -> Optional[List[List[int]]]:
    """Few disjoint paths covering G[comp]; None when no cover method applies."""
    sub, mapping = induced(g, comp)
    try:
        paths = min_path_cover_p32p1free(sub).paths
    except ToughHamError:
        if sub.n > get_settings().cover_oracle_max_n:
            return None
        _, paths = min_path_cover_oracle(sub)
    return [[mapping[v] for v in p.verts] for p in paths]


def build_path_family(g: Graph, q1: int, s_star: int) -> Optional[List[Path]]:
    """
    Cover V - (Q1 u S*) by disjoint paths whose two ends lie in S*.

    Each component of G - (Q1 u S*) is covered by paths (one path with free
    ends when the component is complete); every path end then receives its
    own S* vertex by bipartite matching.

    Args:
        g: Host graph
        q1: Heavy clique
        s_star: S*

    Returns:
        The family F, or None when the ends cannot all be attached
    """
    removed = q1 | s_star
    pieces: List[Tuple[Optional[List[int]], int]] = []
    for comp in components(g, removed):
        if is_complete(g, comp):
            pieces.append((None, comp))
            continue
        cover = _cover_component(g, comp)
        if cover is None:
            logger.info("path_family_uncovered", component=members(comp))
            return None
        pieces.extend((path, comp) for path in cover)

    slots: Dict[Hashable, int] = {}
    for i, (path, comp) in enumerate(pieces):
        if path is None:
            reach = 0
            for v in iter_bits(comp):
                reach |= g.adj[v]
            slots[(i, 0)] = slots[(i, 1)] = reach & s_star
        else:
            slots[(i, 0)] = g.adj[path[0]] & s_star
            slots[(i, 1)] = g.adj[path[-1]] & s_star
    assigned = _assign(slots)
    if assigned is None:
        logger.info("path_family_unattached", paths=len(pieces))
        return None

    family: List[Path] = []
    for i, (path, comp) in enumerate(pieces):
        a, b = assigned[(i, 0)], assigned[(i, 1)]
        if path is None:
            path = route_clique(comp, g.adj[a], g.adj[b])
            if path is None:
                logger.info("path_family_unattached", component=members(comp))
                return None
        family.append(Path([a, *path, b]))
    return family


def route_clique(comp: int, starts: int, ends: int) -> Optional[List[int]]:
    """A spanning order of the clique comp that starts in ``starts`` and ends in ``ends``."""
    starts &= comp
    ends &= comp
    if popcount(comp) == 1:
        return members(comp) if starts and ends else None
    for first in iter_bits(starts):
        last = lowest(ends & ~(1 << first))
        if last >= 0:
            middle = [v for v in iter_bits(comp) if v not in (first, last)]
            return [first, *middle, last]
    return None


def _check_family(g: Graph, s_star: int, d1_star: int, family: Sequence[Path]) -> None:
    used = 0
    for path in family:
        verts = path.verts
        if len(verts) < 2 or not path.is_valid_in(g):
            raise PreconditionError(
                "malformed_family", f"{list(verts)} is not a path of G with two ends"
            )
        if not (s_star >> verts[0] & 1 and s_star >> verts[-1] & 1):
            raise PreconditionError("malformed_family", f"path {list(verts)} does not end in S*")
        interior = 0
        for v in verts[1:-1]:
            interior |= 1 << v
        if interior & (s_star | d1_star):
            raise PreconditionError(
                "malformed_family", f"path {list(verts)} has an interior vertex in S* u D1*"
            )
        if path.vertex_set & used:
            raise PreconditionError("malformed_family", "paths of F overlap")
        used |= path.vertex_set
    outside = g.vertices & ~(s_star | d1_star)
    if outside & ~used:
        raise PreconditionError(
            "malformed_family", "F leaves vertices uncovered", witness=members(outside & ~used)
        )


def claim1_glue(g: Graph, s_star: int, d1_star: int, family: Sequence[Path]) -> GlueOutcome:
    """
    Thread the paths of F and the unused S* vertices through D1*.

    Every excursion (a path of F, or a lone S* vertex) gets two distinct
    ports in D1*, one next to each of its ends; since D1* is complete the
    ports and the unused D1* vertices can be visited in any order.

    Args:
        g: Host graph
        s_star: S*
        d1_star: Complete D1*
        family: Disjoint paths covering V - (D1* u S*) with both ends in S*

    Returns:
        GlueOutcome with the hamiltonian cycle, or the failure reason

    Raises:
        PreconditionError: D1* is not complete or F is malformed
    """
    if not is_complete(g, d1_star):
        raise PreconditionError("complete_d1_star", "D1* must be complete")
    _check_family(g, s_star, d1_star, family)

    covered = 0
    for path in family:
        covered |= path.vertex_set
    excursions = [list(p.verts) for p in family] + [[x] for x in iter_bits(s_star & ~covered)]
    if not excursions:
        if popcount(d1_star) < 3:
            return GlueOutcome(None, "short_cycle", {"D1_star": members(d1_star)})
        return GlueOutcome(Cycle(members(d1_star)))

    slots: Dict[Hashable, int] = {}
    for i, ex in enumerate(excursions):
        slots[(i, 0)] = g.adj[ex[0]] & d1_star
        slots[(i, 1)] = g.adj[ex[-1]] & d1_star
    ports = _assign(slots)
    if ports is None:
        details = {"excursions": len(excursions), "D1_star": popcount(d1_star)}
        logger.info("claim1_glue_failed", reason="ports", **details)
        return GlueOutcome(None, "ports", details)

    verts: List[int] = []
    for i, ex in enumerate(excursions):
        verts += [ports[(i, 0)], *ex, ports[(i, 1)]]
    used = set(verts)
    verts += [v for v in iter_bits(d1_star) if v not in used]
    if len(verts) != g.n or not validate_cycle(g, verts):
        logger.warning("claim1_glue_failed", reason="validation", length=len(verts))
        return GlueOutcome(None, "validation", {"length": len(verts)})
    logger.debug("claim1_glued", excursions=len(excursions))
    return GlueOutcome(Cycle(verts))
