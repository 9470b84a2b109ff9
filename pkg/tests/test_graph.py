"""Unit tests for the bitmask graph core."""

import networkx as nx
import pytest

from src.graph import (
    Cycle,
    Graph,
    Path,
    complement,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    edges_between,
    empty_graph,
    find_path,
    induced,
    is_complete,
    is_connected,
    join,
    lift,
    lowest,
    members,
    min_degree,
    neighborhood,
    path_graph,
    petersen_graph,
    popcount,
    vset,
)
from src.utils.errors import PreconditionError


@pytest.fixture
def c6():
    """Six-cycle."""
    return cycle_graph(6)


def test_vertex_sets():
    """Test mask helpers."""
    mask = vset(5, 1, 3)
    assert members(mask) == [1, 3, 5]
    assert popcount(mask) == 3
    assert lowest(mask) == 1
    assert lowest(0) == -1


def test_from_edges_merges_duplicates(c6):
    """Test edge-list construction."""
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count() == 2
    assert g.degree(1) == 2
    assert c6.edge_count() == 6


def test_construction_rejects_malformed_masks():
    """Test validation of raw adjacency masks."""
    with pytest.raises(PreconditionError) as excinfo:
        Graph(2, (0b10, 0))
    assert excinfo.value.condition == "graph_symmetry"
    with pytest.raises(PreconditionError):
        Graph(1, (0b1,))
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 3)])


def test_networkx_import_relabels_sorted():
    """Test that networkx nodes are relabelled in sorted order."""
    nxg = nx.Graph([("b", "a"), ("b", "c")])
    g = Graph.from_networkx(nxg)
    assert g.edges() == [(0, 1), (1, 2)]
    assert Graph.from_networkx(g.to_networkx()) == g


def test_components_after_removal():
    """Test components of G - X."""
    g = path_graph(5)
    assert components(g, vset(2)) == [vset(0, 1), vset(3, 4)]
    assert is_connected(g)
    assert not is_connected(empty_graph(2))


def test_induced_and_lift(c6):
    """Test induced subgraphs and mapping back."""
    sub, mapping = induced(c6, vset(0, 1, 2))
    assert mapping == (0, 1, 2)
    assert sub.edges() == [(0, 1), (1, 2)]
    sub, mapping = induced(c6, vset(3, 5))
    assert sub.edge_count() == 0
    assert lift(vset(1), mapping) == vset(5)


def test_join_builds_complete_bipartite():
    """Test the join of two edgeless graphs."""
    assert join(empty_graph(2), empty_graph(3)) == complete_bipartite(2, 3)


def test_completeness_and_complement():
    """Test clique checks and complements."""
    k4 = complete_graph(4)
    assert is_complete(k4)
    assert complement(k4).edge_count() == 0
    assert not is_complete(petersen_graph())
    assert is_complete(petersen_graph(), vset(0, 1))
    assert min_degree(petersen_graph()) == 3


def test_neighborhood_excludes_the_set(c6):
    """Test N(X) is taken outside X."""
    assert neighborhood(c6, vset(0, 1)) == vset(2, 5)


def test_edges_between_requires_disjoint_sets(c6):
    """Test edges_between rejects overlapping sets."""
    assert edges_between(c6, vset(0), vset(1, 5)) == [(0, 1), (0, 5)]
    with pytest.raises(PreconditionError):
        edges_between(c6, vset(0, 1), vset(1))


def test_find_path_bfs():
    """Test shortest paths inside an allowed set."""
    g = path_graph(5)
    assert find_path(g, g.vertices, vset(0), vset(4)) == [0, 1, 2, 3, 4]
    assert find_path(g, g.vertices & ~vset(2), vset(0), vset(4)) is None
    assert find_path(g, g.vertices, vset(1, 3), vset(3)) == [3]


def test_cycle_segments_and_normalization():
    """Test cycle navigation."""
    cycle = Cycle((0, 1, 2, 3, 4))
    assert cycle.successor(4) == 0
    assert cycle.predecessor(0) == 4
    assert cycle.segment(3, 1) == (3, 4, 0, 1)
    assert cycle.reverse_segment(1, 3) == (1, 0, 4, 3)
    assert Cycle((2, 0, 1)).normalized().verts == (0, 1, 2)
    assert Cycle((0, 2, 1)).normalized().verts == (0, 1, 2)
    assert cycle.is_valid_in(cycle_graph(5))
    assert not cycle.reversed().is_valid_in(path_graph(5))


def test_walks_reject_repeats():
    """Test path and cycle validation."""
    with pytest.raises(PreconditionError):
        Cycle((0, 1))
    with pytest.raises(PreconditionError):
        Cycle((0, 1, 0))
    with pytest.raises(PreconditionError):
        Path(())
    path = Path((0, 1, 2, 3, 4))
    assert path.segment(3, 1) == (3, 2, 1)
    assert path.successor(4) == -1
    assert path.predecessor(0) == -1
