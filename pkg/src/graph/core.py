"""Simple undirected graphs on vertices 0..n-1 stored as adjacency bitmasks."""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..utils.errors import PreconditionError
from .bitset import VertexSet, full_mask, iter_bits, lowest, popcount


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask. Construction checks
    symmetry, absence of loops and range; use :meth:`trusted` to skip the
    checks when the masks are known to be well-formed.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise PreconditionError("graph_shape", f"expected {self.n} adjacency masks")
        limit = full_mask(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~limit:
                raise PreconditionError("graph_range", f"vertex {v} has an out-of-range neighbour")
            if nbrs >> v & 1:
                raise PreconditionError("graph_loop", f"vertex {v} has a self-loop")
            for u in iter_bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError("graph_symmetry", f"edge {v}-{u} is one-sided")

    @classmethod
    def trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Build without validation."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from an edge list; duplicate edges are merged, loops rejected."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError("graph_range", f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise PreconditionError("graph_loop", f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls.trusted(n, adj)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Import a networkx graph, relabelling its nodes in sorted order."""
        order = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[a], index[b]) for a, b in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        """Export to networkx with integer nodes."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def vertices(self) -> VertexSet:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2


def neighbors(g: Graph, v: int) -> VertexSet:
    """N_G(v)."""
    return g.adj[v]


def neighborhood(g: Graph, xs: VertexSet) -> VertexSet:
    """N_G(X): vertices outside X with a neighbour in X."""
    out = 0
    for v in iter_bits(xs):
        out |= g.adj[v]
    return out & ~xs


def union_neighborhood(g: Graph, xs: VertexSet) -> VertexSet:
    """Union of N_G(x) over x in X, members of X included when adjacent."""
    out = 0
    for v in iter_bits(xs):
        out |= g.adj[v]
    return out


def neighbors_in(g: Graph, target: VertexSet, source: VertexSet) -> VertexSet:
    """N_target(source): vertices of target, outside source, adjacent to source."""
    return neighborhood(g, source) & target


def components(g: Graph, removed: VertexSet = 0) -> List[VertexSet]:
    """Connected components of G - removed, ordered by smallest vertex."""
    remaining = g.vertices & ~removed
    found: List[VertexSet] = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        found.append(comp)
        remaining &= ~comp
    return found


def count_components(g: Graph, removed: VertexSet = 0) -> int:
    """w(G - removed)."""
    return len(components(g, removed))


def is_connected(g: Graph) -> bool:
    return g.n > 0 and count_components(g) == 1


def induced(g: Graph, xs: VertexSet) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Induced subgraph G[X] relabelled to 0..|X|-1.

    Args:
        g: Host graph
        xs: Vertex set to keep

    Returns:
        The subgraph and the tuple mapping new ids to host ids
    """
    order = tuple(iter_bits(xs))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        mask = 0
        for u in iter_bits(g.adj[v] & xs):
            mask |= 1 << index[u]
        adj.append(mask)
    return Graph.trusted(len(order), adj), order


def lift(mask: VertexSet, mapping: Sequence[int]) -> VertexSet:
    """Translate a mask over an induced subgraph back to host ids."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << mapping[i]
    return out


def is_complete(g: Graph, xs: Optional[VertexSet] = None) -> bool:
    """True when every two members of X (default: all of V) are adjacent."""
    xs = g.vertices if xs is None else xs
    for v in iter_bits(xs):
        if (xs & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_independent(g: Graph, xs: VertexSet) -> bool:
    return all(not (g.adj[v] & xs) for v in iter_bits(xs))


def dominates(g: Graph, v: int, xs: VertexSet) -> bool:
    """True when v is adjacent to every vertex of X."""
    return xs & ~g.adj[v] == 0


def edges_between(g: Graph, xs: VertexSet, ys: VertexSet) -> List[Tuple[int, int]]:
    """
    Edges with one end in X and the other in Y.

    Raises:
        PreconditionError: if X and Y overlap
    """
    if xs & ys:
        raise PreconditionError("disjoint_sets", "edges_between needs disjoint X and Y")
    return [(x, y) for x in iter_bits(xs) for y in iter_bits(g.adj[x] & ys)]


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph.trusted(g.n, [full & ~m & ~(1 << v) for v, m in enumerate(g.adj)])


def min_degree(g: Graph) -> int:
    """delta(G); 0 for the empty graph."""
    return min((popcount(m) for m in g.adj), default=0)


def find_path(
    g: Graph, allowed: VertexSet, sources: VertexSet, targets: VertexSet
) -> Optional[List[int]]:
    """
    Shortest path inside G[allowed] from a source to a target.

    Ties resolve to the smallest vertex ids in BFS order.

    Returns:
        Vertex list from a source to a target, or None
    """
    sources &= allowed
    targets &= allowed
    if not sources or not targets:
        return None
    start = lowest(sources & targets)
    if start >= 0:
        return [start]
    parent = {v: -1 for v in iter_bits(sources)}
    queue = deque(iter_bits(sources))
    seen = sources
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v] & allowed & ~seen):
            seen |= 1 << u
            parent[u] = v
            if targets >> u & 1:
                path = [u]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(u)
    return None
