"""Graph core: bitmask graphs, vertex sets, paths and cycles."""

from .bitset import (
    VertexSet,
    from_iterable,
    full_mask,
    iter_bits,
    lex_key,
    lowest,
    members,
    popcount,
    vset,
)
from .builders import (
    complete_bipartite,
    complete_graph,
    complete_multipartite_edges,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
    petersen_graph,
    star_graph,
    wheel_graph,
)
from .core import (
    Graph,
    complement,
    components,
    count_components,
    dominates,
    edges_between,
    find_path,
    induced,
    is_complete,
    is_connected,
    is_independent,
    lift,
    min_degree,
    neighborhood,
    neighbors,
    neighbors_in,
    union_neighborhood,
)
from .walks import Cycle, Path

__all__ = [
    "VertexSet",
    "from_iterable",
    "full_mask",
    "iter_bits",
    "lex_key",
    "lowest",
    "members",
    "popcount",
    "vset",
    "complete_bipartite",
    "complete_graph",
    "complete_multipartite_edges",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "join",
    "path_graph",
    "petersen_graph",
    "star_graph",
    "wheel_graph",
    "Graph",
    "complement",
    "components",
    "count_components",
    "dominates",
    "edges_between",
    "find_path",
    "induced",
    "is_complete",
    "is_connected",
    "is_independent",
    "lift",
    "min_degree",
    "neighborhood",
    "neighbors",
    "neighbors_in",
    "union_neighborhood",
    "Cycle",
    "Path",
]
