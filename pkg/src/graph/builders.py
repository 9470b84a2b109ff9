"""Named graph constructors used across tests, generators and the CLI."""

from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .core import Graph


def empty_graph(n: int) -> Graph:
    return Graph.trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.trusted(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a cycle on 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_multipartite_edges(sizes: Sequence[int]) -> Tuple[int, List[Tuple[int, int]]]:
    """Vertex count and edges of K_{sizes}; parts are consecutive id blocks."""
    part_of: List[int] = []
    for index, size in enumerate(sizes):
        part_of.extend([index] * size)
    n = len(part_of)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]]
    return n, edges


def complete_bipartite(a: int, b: int) -> Graph:
    n, edges = complete_multipartite_edges([a, b])
    return Graph.from_edges(n, edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: List[int] = []
    offset = 0
    for g in graphs:
        adj.extend(m << offset for m in g.adj)
        offset += g.n
    return Graph.trusted(offset, adj)


def join(a: Graph, b: Graph) -> Graph:
    """A + B with every vertex of A adjacent to every vertex of B; B is shifted by |A|."""
    base = disjoint_union([a, b])
    left = (1 << a.n) - 1
    right = ((1 << b.n) - 1) << a.n
    adj = [m | right if v < a.n else m | left for v, m in enumerate(base.adj)]
    return Graph.trusted(base.n, adj)
