"""Unit tests for cycle surgery, vertex insertion and path covers."""

import pytest

from src.generators import planted_lemma_instance
from src.graph import (
    Cycle,
    Graph,
    Path,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from src.oracle import validate_cycle
from src.paths import (
    InsertionRung,
    SpliceLog,
    chvatal_erdos_construction,
    hamiltonian_path_check,
    insert_vertex,
    insert_vertex_into_path,
    is_hamiltonian_connected,
    min_path_cover_p32p1free,
    splice,
)
from src.utils.errors import (
    EndpointMismatchError,
    HypothesisError,
    InteriorCollisionError,
    PreconditionError,
    SpliceError,
)


@pytest.fixture
def square():
    return Cycle((0, 1, 2, 3))


def test_splice_forward_and_reversed(square):
    """Test a segment is found in either direction."""
    assert splice(square, (1, 2), (1, 4, 2)) == Cycle((1, 4, 2, 3, 0))
    assert splice(square, (2, 1), (2, 4, 1)) == Cycle((1, 4, 2, 3, 0))


def test_splice_on_path():
    """Test the path keeps its prefix and suffix."""
    assert splice(Path((0, 1, 2, 3)), (1, 2), (1, 5, 2)) == Path((0, 1, 5, 2, 3))


def test_splice_errors(square):
    """Test malformed replacements."""
    with pytest.raises(EndpointMismatchError):
        splice(square, (1, 2), (1, 4, 3))
    with pytest.raises(InteriorCollisionError):
        splice(square, (1, 2), (1, 3, 2))
    with pytest.raises(SpliceError):
        splice(square, (0, 2), (0, 4, 2))


def test_splice_log_replays(square):
    """Test a log reproduces the object it built."""
    log = SpliceLog(square)
    log.apply((1, 2), (1, 4, 2), "first")
    log.replace(Cycle((0, 1, 4, 2, 3)), "rebuilt")
    log.apply((2, 3), (2, 5, 3), "second")
    assert log.tags == ["first", "rebuilt", "second"]
    assert log.replay() == log.current
    assert log.to_dict()["kind"] == "cycle"
    assert log.to_dict()["steps"][1]["old"] == []


def test_insert_vertex_by_successor_chord():
    """Test the planted chord instance."""
    cg = planted_lemma_instance("insertion")
    x = cg.planted["vertex"]
    log = SpliceLog(Cycle(cg.planted["cycle"]))
    result = insert_vertex(cg.graph, Cycle(cg.planted["cycle"]), x, 2, log=log)
    assert result == Cycle((0, 6, 2, 1, 3, 4, 5))
    assert log.tags == [InsertionRung.SUCCESSOR_CHORD.value]
    assert validate_cycle(cg.graph, result)


def test_insert_vertex_degree_threshold():
    """Test d_C(x) must exceed n/(t+1) - 1."""
    cg = planted_lemma_instance("insertion")
    with pytest.raises(PreconditionError) as excinfo:
        insert_vertex(cg.graph, Cycle(cg.planted["cycle"]), cg.planted["vertex"], 1)
    assert excinfo.value.condition == "insertion_degree"


def test_insert_vertex_consecutive():
    """Test x adjacent to two consecutive cycle vertices."""
    g = Graph.from_edges(7, cycle_graph(6).edges() + [(6, 0), (6, 1)])
    log = SpliceLog(Cycle(range(6)))
    result = insert_vertex(g, Cycle(range(6)), 6, 2, log=log)
    assert result == Cycle((0, 6, 1, 2, 3, 4, 5))
    assert log.tags == ["consecutive"]


def test_insert_vertex_preconditions():
    """Test the outside-vertex and certificate checks."""
    g = Graph.from_edges(7, cycle_graph(6).edges() + [(6, 0), (6, 1)])
    with pytest.raises(PreconditionError) as excinfo:
        insert_vertex(g, Cycle(range(6)), 3, 2)
    assert excinfo.value.condition == "outside_vertex"
    with pytest.raises(HypothesisError):
        insert_vertex(g, Cycle(range(6)), 6, 2, tough=False)


def test_insert_vertex_into_path_end_extension():
    """Test x seen only by the last path vertex."""
    log = SpliceLog(Path((0, 1, 2)))
    result = insert_vertex_into_path(path_graph(4), Path((0, 1, 2)), 3, log=log)
    assert result == Path((0, 1, 2, 3))
    assert log.tags == [InsertionRung.END_EXTENSION.value]


def test_chvatal_erdos_construction():
    """Test kappa >= alpha gives a hamiltonian cycle with a replayable log."""
    g = complete_bipartite(3, 3)
    cycle, log = chvatal_erdos_construction(g)
    assert validate_cycle(g, cycle)
    assert log.replay() == cycle


def test_chvatal_erdos_needs_kappa_ge_alpha():
    """Test the Petersen graph is refused."""
    with pytest.raises(PreconditionError) as excinfo:
        chvatal_erdos_construction(petersen_graph())
    assert excinfo.value.condition == "kappa_ge_alpha"


def test_hamiltonian_path_checks():
    """Test the path and hamiltonian-connectivity checks."""
    assert hamiltonian_path_check(path_graph(3)) == Path((0, 1, 2))
    assert hamiltonian_path_check(star_graph(3)) is None
    assert is_hamiltonian_connected(cycle_graph(5)) == (False, (0, 2))
    assert is_hamiltonian_connected(complete_graph(4)) == (True, None)


def test_path_cover_below_toughness_one():
    """Test K_{2,4} is covered by two paths, matching its bound."""
    g = complete_bipartite(2, 4)
    cover = min_path_cover_p32p1free(g)
    assert cover.size == 2
    assert cover.bound == 2
    assert cover.is_valid_in(g)


def test_path_cover_tough_graph():
    """Test a 1-tough graph gets one path and no cutset witness."""
    cover = min_path_cover_p32p1free(cycle_graph(5))
    assert cover.size == 1
    assert cover.witness is None
    assert cover.method == "longest_path"


def test_path_cover_complete_components():
    """Test an edgeless graph."""
    cover = min_path_cover_p32p1free(empty_graph(3))
    assert cover.size == 3
    assert cover.to_dict()["paths"] == [[0], [1], [2]]


def test_path_cover_hypothesis():
    """Test graphs with an induced P3 u 2P1 are refused."""
    with pytest.raises(HypothesisError):
        min_path_cover_p32p1free(cycle_graph(8))
