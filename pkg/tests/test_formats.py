"""Unit tests for graph6 and edge-list files."""

import pytest

from src.graph import Graph, complete_graph, cycle_graph, petersen_graph
from src.harness.formats import (
    detect_format,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graph,
    write_graph,
)
from src.utils.errors import GraphFormatError


def test_graph6_known_strings():
    """Test small complete graphs against their published encodings."""
    assert emit_graph6(complete_graph(3)) == "Bw"
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


def test_graph6_preserves_petersen():
    """Test a nontrivial graph survives encoding."""
    assert parse_graph6(emit_graph6(petersen_graph())) == petersen_graph()


@pytest.mark.parametrize(
    "text,position",
    [("B", 1), ("Bw~", 2), ("B!", 1), (">>graph6<<B!", 11)],
)
def test_graph6_errors_point_at_the_byte(text, position):
    """Test truncation, trailing data and bad bytes report their position."""
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph6(text)
    assert excinfo.value.position == position


def test_edge_list():
    """Test the header, comments and the emitted text."""
    g = parse_edge_list("# a 5-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0  # closing edge\n")
    assert g == cycle_graph(5)
    assert emit_edge_list(Graph.from_edges(3, [(0, 1)])) == "3 1\n0 1\n"


@pytest.mark.parametrize(
    "text,line",
    [
        ("3 1\n0 1\n1 2\n", 3),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 1\n0 x\n", 2),
        ("", 1),
    ],
)
def test_edge_list_errors_report_the_line(text, line):
    """Test malformed edge lists name the offending line."""
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list(text)
    assert excinfo.value.line == line


def test_detect_format():
    """Test suffixes win over content."""
    assert detect_format("Bw\n") == "graph6"
    assert detect_format("3 1\n0 1\n") == "edgelist"
    assert detect_format("3 1\n0 1\n", "graph.g6") == "graph6"
    assert detect_format("Bw", "graph.edges") == "edgelist"


def test_parse_graph_rejects_several_graph6_lines():
    """Test one graph per file."""
    with pytest.raises(GraphFormatError):
        parse_graph("Bw\nC~\n", "graph6")


def test_read_and_write(tmp_path):
    """Test files pick their format from the suffix."""
    g6 = tmp_path / "petersen.g6"
    edges = tmp_path / "petersen.edges"
    write_graph(petersen_graph(), g6)
    write_graph(petersen_graph(), edges)
    assert edges.read_text().startswith("10 15\n")
    assert read_graph(g6) == petersen_graph()
    assert read_graph(edges) == petersen_graph()
