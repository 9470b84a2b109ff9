"""Seeded random graphs repaired into (P3 u kP1)-freeness."""

import random
from itertools import combinations
from typing import List

from ..graph import Graph
from ..monitoring.logger import get_logger
from ..patterns import is_p3_kp1_free
from ..utils.errors import PreconditionError

logger = get_logger(__name__)


def random_free_graph(n: int, p: float, k: int, seed: int) -> Graph:
    """
    Sample G(n, p) and add edges until no induced P3 u kP1 remains.

    Each repair joins two of the witness's isolated vertices (picked by the
    seeded generator) when k >= 2, or closes the witness P3 into a triangle
    otherwise. Edges are only added, so the loop ends by K_n at the latest.

    Args:
        n: Order
        p: Edge probability in [0, 1]
        k: Number of isolated pattern vertices
        seed: Seed; equal arguments give identical graphs

    Returns:
        A (P3 u kP1)-free graph
    """
    if not 0 <= p <= 1:
        raise PreconditionError("probability", f"p={p} outside [0, 1]")
    if n < 0 or k < 0:
        raise PreconditionError("parameters", "n and k must be non-negative")
    rng = random.Random(seed)
    adj: List[int] = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u

    repairs = 0
    while True:
        g = Graph.trusted(n, adj)
        free, witness = is_p3_kp1_free(g, k)
        if free:
            break
        mapping = witness.mapping
        if k >= 2:
            u, v = rng.choice(list(combinations(mapping[3:], 2)))
        else:
            u, v = mapping[0], mapping[2]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        repairs += 1
    logger.debug(
        "random_free_graph", n=n, p=p, k=k, seed=seed, repairs=repairs, edges=g.edge_count()
    )
    return g
