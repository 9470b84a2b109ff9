"""Connectivity and independence number."""

from typing import List, Optional, Tuple

import networkx as nx

from ..graph import (
    Graph,
    count_components,
    from_iterable,
    full_mask,
    is_complete,
    iter_bits,
    lowest,
)


def connectivity(g: Graph) -> Tuple[int, Optional[int]]:
    """
    Vertex connectivity with a minimum separating set.

    Args:
        g: Graph with n >= 1

    Returns:
        (kappa, witness). Complete graphs give (n - 1, None); disconnected
        graphs give (0, 0).
    """
    if g.n <= 1 or is_complete(g):
        return max(g.n - 1, 0), None
    if count_components(g) > 1:
        return 0, 0
    cut = nx.minimum_node_cut(g.to_networkx())
    return len(cut), from_iterable(cut)


def _colour_classes(hadj: List[int], candidates: int) -> Tuple[List[int], List[int]]:
    """Greedy colouring of the candidates in the complement (cliques of the host)."""
    order: List[int] = []
    colours: List[int] = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = lowest(q)
            q &= ~(1 << v) & ~hadj[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            colours.append(colour)
    return order, colours


def independence_number(g: Graph) -> Tuple[int, int]:
    """
    Exact independence number by branch and bound.

    Searches maximum cliques of the complement; the bound is a greedy
    clique cover of the candidate set.

    Args:
        g: Graph with n >= 1

    Returns:
        (alpha, maximum independent set as a mask)
    """
    full = full_mask(g.n)
    hadj = [full & ~m & ~(1 << v) for v, m in enumerate(g.adj)]
    best = [0, 0]

    def expand(size: int, chosen: int, candidates: int) -> None:
        order, colours = _colour_classes(hadj, candidates)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best[0]:
                return
            v = order[i]
            picked = chosen | (1 << v)
            rest = candidates & hadj[v]
            if rest:
                expand(size + 1, picked, rest)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, picked
            candidates &= ~(1 << v)

    if g.n:
        expand(0, 0, full)
    return best[0], best[1]


def alpha_at_least(g: Graph, within: int, k: int) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically least independent k-set inside ``within``, if any.

    Args:
        g: Host graph
        within: Candidate vertex mask
        k: Required size

    Returns:
        Sorted vertex tuple or None
    """
    chosen: List[int] = []

    def search(candidates: int) -> bool:
        if len(chosen) == k:
            return True
        for v in iter_bits(candidates):
            if len(chosen) + (candidates >> v).bit_count() < k:
                return False
            chosen.append(v)
            if search(candidates & ~g.adj[v] & ~((2 << v) - 1)):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if search(within) else None
