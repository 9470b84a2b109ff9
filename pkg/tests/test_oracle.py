"""Unit tests for the exact hamiltonicity oracles and validators."""

import pytest

from src.graph import (
    Path,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from src.oracle import (
    Method,
    Verdict,
    hamiltonian_cycle_oracle,
    hamiltonian_path_oracle,
    longest_path,
    min_path_cover_oracle,
    validate_cycle,
    validate_path,
    validate_path_cover,
)
from src.utils.errors import PreconditionError, SizeLimitError


@pytest.mark.parametrize("method", [Method.DP, Method.BACKTRACK])
def test_petersen_is_not_hamiltonian(method):
    """Test both methods reject the Petersen graph."""
    answer = hamiltonian_cycle_oracle(petersen_graph(), method)
    assert answer.verdict == Verdict.NO
    assert answer.witness is None
    assert answer.method == method


def test_methods_agree_on_least_witness():
    """Test DP and backtracking return the same cycle."""
    g = complete_bipartite(3, 3)
    dp = hamiltonian_cycle_oracle(g, Method.DP)
    bt = hamiltonian_cycle_oracle(g, Method.BACKTRACK)
    assert dp.yes and bt.yes
    assert dp.witness.verts == (0, 3, 1, 4, 2, 5)
    assert bt.witness == dp.witness
    assert validate_cycle(g, dp.witness)


def test_unbalanced_bipartite_is_not_hamiltonian():
    """Test K_{2,3}."""
    assert hamiltonian_cycle_oracle(complete_bipartite(2, 3)).verdict == Verdict.NO


def test_cycle_oracle_order():
    """Test n >= 3 is required."""
    with pytest.raises(PreconditionError):
        hamiltonian_cycle_oracle(complete_graph(2))


def test_oracle_size_limit(monkeypatch):
    """Test the configured envelope."""
    monkeypatch.setenv("TOUGHHAM_ORACLE_MAX_N", "5")
    with pytest.raises(SizeLimitError):
        hamiltonian_cycle_oracle(cycle_graph(6))


def test_pinned_paths():
    """Test pinned ends on the 6-cycle."""
    g = cycle_graph(6)
    assert hamiltonian_path_oracle(g, 0, 2).verdict == Verdict.NO
    answer = hamiltonian_path_oracle(g, 0, 1)
    assert answer.witness == Path((0, 5, 4, 3, 2, 1))
    assert validate_path(g, answer.witness)
    backtrack = hamiltonian_path_oracle(g, 0, 1, method=Method.BACKTRACK)
    assert backtrack.witness == answer.witness


def test_path_oracle_preconditions():
    """Test distinct, in-range ends."""
    with pytest.raises(PreconditionError):
        hamiltonian_path_oracle(cycle_graph(5), 1, 1)
    with pytest.raises(PreconditionError):
        hamiltonian_path_oracle(cycle_graph(5), 0, 7)


def test_star_has_no_hamiltonian_path():
    """Test a star with three leaves."""
    assert not hamiltonian_path_oracle(star_graph(3)).yes


@pytest.mark.parametrize(
    "g,expected",
    [(empty_graph(3), 3), (path_graph(5), 1), (star_graph(3), 2)],
)
def test_min_path_cover(g, expected):
    """Test exact path cover sizes."""
    size, paths = min_path_cover_oracle(g)
    assert size == expected
    assert len(paths) == expected
    assert validate_path_cover(g, paths)


def test_longest_path():
    """Test the Petersen graph has a hamiltonian path."""
    path = longest_path(petersen_graph())
    assert len(path) == 10
    assert validate_path(petersen_graph(), path)


def test_validators_reject_bad_walks():
    """Test the validators on broken input."""
    g = cycle_graph(5)
    assert not validate_cycle(g, [0, 1, 2])
    assert validate_cycle(g, [0, 1, 2, 3, 4])
    assert not validate_cycle(g, [0, 1, 2, 3], hamiltonian=True)
    assert not validate_path(g, [0, 2])
    assert validate_path(g, [0, 1], hamiltonian=False)
    assert not validate_path_cover(g, [[0, 1], [1, 2, 3, 4]])
    assert not validate_path_cover(g, [[0, 1, 2]])
