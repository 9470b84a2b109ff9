"""Hamiltonian cycles from kappa(G) >= alpha(G) by iterative extension."""

from typing import List, Optional, Tuple

import networkx as nx

from ..graph import Cycle, Graph, components, full_mask, find_path, neighborhood, neighbors
from ..invariants import connectivity, independence_number
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..oracle import hamiltonian_cycle_oracle
from ..utils.errors import ConstructionError, PreconditionError
from .splice import SpliceLog

logger = get_logger(__name__)


def _initial_cycle(g: Graph) -> Cycle:
    edges = nx.find_cycle(g.to_networkx(), source=0)
    return Cycle([u for u, _ in edges])


def _extend(g: Graph, cycle: Cycle, log: SpliceLog) -> Optional[Cycle]:
    """One extension step through the outside component holding the smallest vertex."""
    outside = components(g, removed=cycle.vertex_set)[0]
    attach = neighborhood(g, outside)
    ordered: List[int] = [v for v in cycle.verts if attach >> v & 1]

    for u in ordered:
        w = cycle.successor(u)
        if attach >> w & 1:
            bridge = find_path(g, outside, neighbors(g, u), neighbors(g, w))
            if bridge:
                return log.apply((u, w), [u, *bridge, w], "consecutive_attachments")

    for a, u in enumerate(ordered):
        for v in ordered[a + 1 :] + ordered[:a]:
            up, vp = cycle.successor(u), cycle.successor(v)
            if not g.has_edge(up, vp):
                continue
            bridge = find_path(g, outside, neighbors(g, u), neighbors(g, v))
            if bridge is None:
                continue
            inner = cycle.segment(up, v)
            return log.apply(
                cycle.segment(u, vp), [u, *bridge, *inner[::-1], vp], "crossing_successors"
            )
    return None


def chvatal_erdos_construction(
    g: Graph, log: Optional[SpliceLog] = None
) -> Tuple[Cycle, SpliceLog]:
    """
    Construct a hamiltonian cycle of a graph with kappa(G) >= alpha(G).

    Starting from any cycle, each round takes the outside component H of the
    smallest outside vertex and either routes the cycle through H between two
    consecutive attachment vertices, or uses an edge between the successors
    of two attachments. Rounds are capped at n^2; past the cap the exact
    oracle finishes and the fallback is logged.

    Args:
        g: Graph with n >= 3
        log: Optional splice log; a fresh one is started from the first cycle

    Returns:
        Hamiltonian cycle and the splice log that built it

    Raises:
        PreconditionError: n < 3 or kappa(G) < alpha(G)
        ConstructionError: the extension stalled and the oracle cannot finish
    """
    if g.n < 3:
        raise PreconditionError("cycle_order", "hamiltonian cycles need n >= 3")
    kappa, cut = connectivity(g)
    alpha, independent = independence_number(g)
    if kappa < alpha:
        raise PreconditionError(
            "kappa_ge_alpha",
            f"kappa={kappa} < alpha={alpha}",
            witness={"cut": cut, "independent": independent},
        )

    cycle = _initial_cycle(g)
    if log is None:
        log = SpliceLog(cycle)
    else:
        log.replace(cycle, "initial_cycle")
    full = full_mask(g.n)
    rounds = 0
    while cycle.vertex_set != full:
        if rounds >= g.n * g.n:
            break
        rounds += 1
        extended = _extend(g, cycle, log)
        if extended is None:
            break
        cycle = extended

    if cycle.vertex_set != full:
        get_metrics_collector().record_fallback("chvatal_erdos_cycle")
        logger.info("oracle_fallback", operation="chvatal_erdos_cycle", n=g.n, length=len(cycle))
        answer = hamiltonian_cycle_oracle(g)
        if not answer.yes:
            raise ConstructionError(
                "chvatal_erdos_cycle", "extension stalled and no hamiltonian cycle exists", {}
            )
        cycle = log.replace(answer.witness, "oracle")
    logger.debug("chvatal_erdos_cycle", n=g.n, rounds=rounds)
    return cycle, log


def chvatal_erdos_cycle(g: Graph, log: Optional[SpliceLog] = None) -> Cycle:
    """Hamiltonian cycle when kappa(G) >= alpha(G); see :func:`chvatal_erdos_construction`."""
    return chvatal_erdos_construction(g, log)[0]
