"""Star matchings as max-flow b-matchings.

The network is source -> x (capacity f(x)) -> y (uncapacitated) -> sink
(capacity 1). A saturating flow is a star matching; otherwise the x-vertices
on the source side of a minimum cut form a set whose neighbourhood is
smaller than its demand.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Mapping, Sequence, Set, Tuple, Union

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from ..utils.errors import PreconditionError

_SOURCE = ("source",)
_SINK = ("sink",)


@dataclass(frozen=True)
class StarMatching:
    """Vertex-disjoint stars: centre -> leaves."""

    stars: Dict[Hashable, Tuple[Hashable, ...]]

    def leaves(self, center: Hashable) -> Tuple[Hashable, ...]:
        return self.stars.get(center, ())

    def is_valid(
        self, adj: Mapping[Hashable, Iterable[Hashable]], f: Mapping[Hashable, int]
    ) -> bool:
        used: Set[Hashable] = set()
        for center, leaves in self.stars.items():
            if len(leaves) != f[center] or not set(leaves) <= set(adj[center]):
                return False
            if used & set(leaves):
                return False
            used |= set(leaves)
        return set(self.stars) == set(f)


@dataclass(frozen=True)
class DeficientSet:
    """Centres whose joint neighbourhood is smaller than their total demand."""

    members: Tuple[Hashable, ...]
    neighborhood_size: int
    demand: int


def _leaf_order(
    xs: Sequence[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]
) -> Dict[Hashable, int]:
    order: Dict[Hashable, int] = {}
    for x in xs:
        for y in adj.get(x, ()):
            order.setdefault(y, len(order))
    return order


def _network(
    xs: Sequence[Hashable],
    adj: Mapping[Hashable, Iterable[Hashable]],
    f: Mapping[Hashable, int],
    order: Mapping[Hashable, int],
) -> nx.DiGraph:
    net = nx.DiGraph()
    net.add_node(_SOURCE)
    net.add_node(_SINK)
    for x in xs:
        if f[x] < 1:
            raise PreconditionError("positive_demand", f"f({x!r}) must be at least 1")
        net.add_edge(_SOURCE, ("x", x), capacity=f[x])
        for y in sorted(set(adj.get(x, ())), key=order.__getitem__):
            net.add_edge(("x", x), ("y", y))
    for y in sorted(order, key=order.__getitem__):
        net.add_edge(("y", y), _SINK, capacity=1)
    return net


def _residual_reach(residual: nx.DiGraph, start: Hashable, forward: bool) -> Set[Hashable]:
    """Nodes reachable from ``start`` (forward) or able to reach it (backward) in the residual."""
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if forward:
            edges = residual.out_edges(node, data=True)
        else:
            edges = residual.in_edges(node, data=True)
        for u, v, data in edges:
            other = v if forward else u
            if other not in seen and data["capacity"] - data["flow"] > 0:
                seen.add(other)
                queue.append(other)
    return seen


def star_matching(
    xs: Sequence[Hashable],
    ys: Sequence[Hashable],
    adj: Mapping[Hashable, Iterable[Hashable]],
    f: Mapping[Hashable, int],
) -> Union[StarMatching, DeficientSet]:
    """
    Find stars with d(x) = f(x) for every centre and disjoint leaves, or a Hall violator.

    Args:
        xs: Centres
        ys: Leaf candidates; adjacency outside ys is ignored
        adj: Bipartite relation x -> iterable of y
        f: Demand per centre, each at least 1

    Returns:
        StarMatching when every demand is met, else the minimal deficient
        set read off the minimum cut
    """
    rank = {y: i for i, y in enumerate(ys)}
    restricted = {x: [y for y in adj.get(x, ()) if y in rank] for x in xs}
    order = {y: rank[y] for y in sorted(_leaf_order(xs, restricted), key=rank.__getitem__)}
    residual = edmonds_karp(_network(xs, restricted, f, order), _SOURCE, _SINK)
    demand = sum(f[x] for x in xs)
    if residual.graph["flow_value"] == demand:
        stars: Dict[Hashable, Tuple[Hashable, ...]] = {}
        for x in xs:
            leaves = [
                node[1]
                for node, data in residual[("x", x)].items()
                if node[0] == "y" and data["flow"] > 0
            ]
            stars[x] = tuple(sorted(leaves, key=rank.__getitem__))
        return StarMatching(stars)
    reach = _residual_reach(residual, _SOURCE, forward=True)
    deficient = tuple(x for x in xs if ("x", x) in reach)
    nbrs = {y for x in deficient for y in restricted[x]}
    return DeficientSet(deficient, len(nbrs), sum(f[x] for x in deficient))


def max_deficiency_set(
    xs: Sequence[Hashable],
    adj: Mapping[Hashable, Iterable[Hashable]],
    f: Mapping[Hashable, int],
) -> Tuple[Tuple[Hashable, ...], int]:
    """
    The inclusion-maximal set T maximising f(T) - |N(T)|.

    Maximum-deficiency sets are closed under union, so the largest one is
    unique; it is the x-part of the maximal source side of a minimum cut,
    i.e. the centres that cannot reach the sink in the residual network.

    Returns:
        (members in input order, deficiency); deficiency is at least 0 since
        the empty set qualifies
    """
    order = _leaf_order(xs, adj)
    residual = edmonds_karp(_network(xs, adj, f, order), _SOURCE, _SINK)
    to_sink = _residual_reach(residual, _SINK, forward=False)
    chosen = tuple(x for x in xs if ("x", x) not in to_sink)
    nbrs = {y for x in chosen for y in adj.get(x, ())}
    return chosen, sum(f[x] for x in chosen) - len(nbrs)
