"""Search for a clique Q1 with |Q1| - 2|N(Q1)| >= 2 inside a component."""

from typing import Optional

import networkx as nx

from ..config import get_settings
from ..graph import (
    Graph,
    components,
    induced,
    is_complete,
    lift,
    members,
    neighborhood,
    popcount,
    vset,
)
from ..invariants import toughness
from ..monitoring.logger import get_logger
from ..utils.errors import SizeLimitError

logger = get_logger(__name__)


def heavy_weight(g: Graph, q: int) -> int:
    """|Q| - 2|N_G(Q)|."""
    return popcount(q) - 2 * popcount(neighborhood(g, q))


def _is_heavy(g: Graph, q: int) -> bool:
    return heavy_weight(g, q) >= 2


def _peel_tough_set(g: Graph, d1: int) -> Optional[int]:
    """A heavy complete component of G[D1] - T for a tough set T of G[D1]."""
    sub, mapping = induced(g, d1)
    try:
        cert = toughness(sub)
    except SizeLimitError:
        return None
    if not cert.tough_set:
        return None
    for piece in components(sub, cert.tough_set):
        q = lift(piece, mapping)
        if is_complete(g, q) and _is_heavy(g, q):
            return q
    return None


def _exact_search(g: Graph, d1: int, budget: int) -> Optional[int]:
    sub, mapping = induced(g, d1)
    best: Optional[int] = None
    best_key = None
    for visited, clique in enumerate(nx.enumerate_all_cliques(sub.to_networkx())):
        if visited >= budget:
            logger.info("heavy_clique_budget_exhausted", budget=budget, d1_size=popcount(d1))
            break
        q = vset(*(mapping[i] for i in clique))
        weight = heavy_weight(g, q)
        if weight < 2:
            continue
        key = (-weight, members(q))
        if best_key is None or key < best_key:
            best, best_key = q, key
    return best


def heavy_clique_search(g: Graph, d1: int, budget: Optional[int] = None) -> Optional[int]:
    """
    Find a clique Q1 inside D1 with |Q1| - 2|N_G(Q1)| >= 2.

    Tries the whole of D1 when it is complete, then the complete components
    left after removing a tough set of G[D1], then (for small D1) every
    clique of G[D1], keeping the heaviest.

    Args:
        g: Host graph
        d1: Vertex set to search
        budget: Cliques examined by the exact search (default from settings)

    Returns:
        Q1 as a vertex set, or None
    """
    settings = get_settings()
    budget = settings.heavy_clique_budget if budget is None else budget
    if not d1:
        return None
    if is_complete(g, d1):
        if _is_heavy(g, d1):
            logger.debug("heavy_clique_found", method="whole_component", size=popcount(d1))
            return d1
    else:
        peeled = _peel_tough_set(g, d1)
        if peeled is not None:
            logger.debug("heavy_clique_found", method="tough_set_peeling", size=popcount(peeled))
            return peeled
    if popcount(d1) <= settings.heavy_clique_max_n:
        found = _exact_search(g, d1, budget)
        if found is not None:
            logger.debug("heavy_clique_found", method="exact", size=popcount(found))
            return found
    logger.info(
        "heavy_clique_missing", d1_size=popcount(d1), neighborhood=popcount(neighborhood(g, d1))
    )
    return None
