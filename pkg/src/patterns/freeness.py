"""(P3 u kP1)-freeness and the small patterns the hamiltonicity results mention."""

from typing import Optional, Tuple

from ..graph import Graph, empty_graph, iter_bits, path_graph
from ..invariants import alpha_at_least
from .induced import PatternWitness, find_induced


def p3_union_kp1(k: int) -> Graph:
    """Path 0-1-2 plus isolated vertices 3..k+2."""
    return Graph.from_edges(3 + k, [(0, 1), (1, 2)])


def p2_union_kp1(k: int) -> Graph:
    """Edge 0-1 plus isolated vertices 2..k+1."""
    return Graph.from_edges(2 + k, [(0, 1)])


def p4() -> Graph:
    return path_graph(4)


def independent_set_pattern(k: int) -> Graph:
    return empty_graph(k)


def is_free(g: Graph, pattern: Graph) -> Tuple[bool, Optional[PatternWitness]]:
    """Generic R-freeness via :func:`find_induced`."""
    witness = find_induced(g, pattern)
    return witness is None, witness


def is_p3_kp1_free(g: Graph, k: int) -> Tuple[bool, Optional[PatternWitness]]:
    """
    Decide (P3 u kP1)-freeness.

    For each induced path a-b-c (a < c, ac a non-edge) the k isolated
    vertices must form an independent set avoiding N[a] u N[b] u N[c].
    The witness is the same lexicographically least one
    :func:`find_induced` reports for ``p3_union_kp1(k)``.

    Args:
        g: Graph
        k: Number of isolated vertices, k >= 0

    Returns:
        (True, None) when free, else (False, witness)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    closed = [m | (1 << v) for v, m in enumerate(g.adj)]
    for a in range(g.n):
        for b in iter_bits(g.adj[a]):
            for c in iter_bits(g.adj[b] & ~closed[a]):
                rest = g.vertices & ~(closed[a] | closed[b] | closed[c])
                if rest.bit_count() < k:
                    continue
                isolated = alpha_at_least(g, rest, k)
                if isolated is not None:
                    return False, PatternWitness((a, b, c) + isolated)
    return True, None
