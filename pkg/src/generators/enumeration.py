"""Exhaustive small-graph streams."""

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from ..graph import Graph, iter_bits
from ..patterns import is_p3_kp1_free
from ..utils.errors import PreconditionError, SizeLimitError

MAX_ENUMERATION_N = 8
MAX_FREE_ENUMERATION_N = 9


def _refined_cells(g: Graph) -> List[List[int]]:
    """Colour refinement from degrees; cells ordered by their stable colour."""
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        signature = [
            (colour[v], tuple(sorted(colour[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)
        ]
        ranks: Dict[Tuple, int] = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        refined = [ranks[sig] for sig in signature]
        if len(set(refined)) == len(set(colour)):
            colour = refined
            break
        colour = refined
    cells: Dict[int, List[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for i, j in combinations(range(len(order)), 2):
        code = code << 1 | int(g.has_edge(order[i], order[j]))
    return code


def canonical_form(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    """
    Isomorphism-invariant code of ``g`` and a vertex order attaining it.

    The code is the smallest upper-triangle bit string over all vertex
    orders that respect the colour-refinement cells. Exact for every n; the
    cost is the product of the cell factorials.

    Returns:
        (code, order) where order[i] is the vertex placed at position i
    """
    cells = _refined_cells(g)
    best_code = -1
    best_order: Tuple[int, ...] = ()
    for choice in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for block in choice for v in block)
        code = _code(g, order)
        if best_code < 0 or code < best_code:
            best_code, best_order = code, order
    return best_code, best_order


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """The graph with vertex order[i] renamed to i."""
    position = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges()))


def _labeled(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in iter_bits(mask)))


def _unlabeled(n: int) -> List[Graph]:
    level = [Graph.trusted(0, [])] if n == 0 else [Graph.trusted(1, [0])]
    for size in range(2, n + 1):
        seen: Dict[int, Graph] = {}
        for base in level:
            for nbrs in range(1 << (size - 1)):
                adj = list(base.adj) + [nbrs]
                for u in iter_bits(nbrs):
                    adj[u] |= 1 << (size - 1)
                candidate = Graph.trusted(size, adj)
                code, order = canonical_form(candidate)
                if code not in seen:
                    seen[code] = relabel(candidate, order)
        level = [seen[code] for code in sorted(seen)]
    return level


def enumerate_small(n: int, unlabeled: bool = False) -> Iterator[Graph]:
    """
    Stream every graph on n vertices.

    Args:
        n: Order, at most 8
        unlabeled: Yield one canonical representative per isomorphism class

    Returns:
        Iterator of graphs; labeled streams follow the edge bitmask order,
        unlabeled streams the canonical code order

    Raises:
        SizeLimitError: n > 8
    """
    if n > MAX_ENUMERATION_N:
        raise SizeLimitError("enumerate_small", n, MAX_ENUMERATION_N)
    if unlabeled:
        return iter(_unlabeled(n))
    return _labeled(n)


def _extensions(base: Graph) -> Iterator[Graph]:
    size = base.n + 1
    for nbrs in range(1 << base.n):
        adj = list(base.adj) + [nbrs]
        for u in iter_bits(nbrs):
            adj[u] |= 1 << base.n
        yield Graph.trusted(size, adj)


@lru_cache(maxsize=None)
def _free_level(n: int, k: int) -> Tuple[Graph, ...]:
    if n <= 1:
        return (Graph.trusted(n, [0] * n),)
    buckets: Dict[str, List[nx.Graph]] = {}
    level: List[Graph] = []
    for base in _free_level(n - 1, k):
        for candidate in _extensions(base):
            if not is_p3_kp1_free(candidate, k)[0]:
                continue
            nxg = candidate.to_networkx()
            bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(nxg), [])
            if any(nx.is_isomorphic(nxg, other) for other in bucket):
                continue
            bucket.append(nxg)
            level.append(candidate)
    return tuple(level)


def enumerate_free(n: int, k: int) -> Iterator[Graph]:
    """
    Stream one graph per isomorphism class of (P3 u kP1)-free graphs on n vertices.

    The class is hereditary, so every member on n vertices is a one-vertex
    extension of a member on n - 1 vertices; levels are built that way and
    cached per (n, k). Reaches one order beyond :func:`enumerate_small`.

    Args:
        n: Order, at most 9
        k: Number of isolated vertices in the forbidden pattern, k >= 0

    Returns:
        Iterator of graphs in extension order

    Raises:
        SizeLimitError: n > 9
    """
    if k < 0 or n < 0:
        raise PreconditionError("parameter", "n and k must be non-negative")
    if n > MAX_FREE_ENUMERATION_N:
        raise SizeLimitError("enumerate_free", n, MAX_FREE_ENUMERATION_N)
    return iter(_free_level(n, k))
