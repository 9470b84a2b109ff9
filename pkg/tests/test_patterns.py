"""Unit tests for induced-pattern search and the cutset structure check."""

import pytest

from src.generators import clique_join
from src.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen_graph,
    vset,
)
from src.patterns import (
    ClauseStatus,
    check_lemma21,
    classify_cutset,
    find_induced,
    is_free,
    is_p3_kp1_free,
    p3_union_kp1,
    p4,
)
from src.utils.errors import HypothesisError, PreconditionError


def test_witness_is_lexicographically_least():
    """Test the freeness witness agrees with the generic search."""
    g = cycle_graph(6)
    free, witness = is_p3_kp1_free(g, 1)
    assert not free
    assert witness.to_list() == [0, 1, 2, 4]
    assert witness.realizes(g, p3_union_kp1(1))
    assert find_induced(g, p3_union_kp1(1)) == witness


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (5, 1, True),
        (6, 1, False),
        (6, 3, True),
        (7, 2, True),
        (8, 2, False),
    ],
)
def test_cycle_freeness(n, k, expected):
    """Test (P3 u kP1)-freeness of cycles."""
    assert is_p3_kp1_free(cycle_graph(n), k)[0] is expected


def test_petersen_freeness():
    """Test the Petersen graph is free for k = 3 but not k = 2."""
    g = petersen_graph()
    assert is_p3_kp1_free(g, 3) == (True, None)
    free, witness = is_p3_kp1_free(g, 2)
    assert not free
    assert witness.realizes(g, p3_union_kp1(2))


def test_negative_k_rejected():
    """Test k must be non-negative."""
    with pytest.raises(ValueError):
        is_p3_kp1_free(cycle_graph(5), -1)


def test_p4_freeness():
    """Test generic freeness on P4."""
    assert not is_free(cycle_graph(5), p4())[0]
    assert is_free(complete_bipartite(2, 3), p4()) == (True, None)


def test_pattern_size_limit():
    """Test patterns beyond the search limit are refused."""
    with pytest.raises(PreconditionError):
        find_induced(cycle_graph(12), cycle_graph(9))


def test_classify_cutset():
    """Test the S1/S2 split."""
    cls = classify_cutset(complete_bipartite(2, 3), vset(0, 1))
    assert cls.s1 == 0
    assert cls.s2 == vset(0, 1)
    assert cls.components == [vset(2), vset(3), vset(4)]
    assert cls.noncomplete_index is None


def test_cutset_clauses_on_clique_join():
    """Test the clauses on K_2 joined to four isolated vertices."""
    g = clique_join(2, [1, 1, 1, 1]).graph
    report = check_lemma21(g, vset(0, 1), 3)
    assert report.passed
    assert report.components == 4
    assert report.clauses["i"].status == ClauseStatus.NOT_APPLICABLE
    assert report.clauses["ii"].status == ClauseStatus.PASS
    assert report.clauses["iii"].status == ClauseStatus.NOT_APPLICABLE
    assert report.clauses["iv"].status == ClauseStatus.UNCHECKED

    report = check_lemma21(g, vset(0, 1), 1)
    assert report.passed
    assert report.failures() == {}
    assert report.clauses["iii"].status == ClauseStatus.PASS


def test_cutset_clauses_preconditions():
    """Test the freeness hypothesis and the cutset requirement."""
    with pytest.raises(HypothesisError) as excinfo:
        check_lemma21(cycle_graph(6), vset(0, 3), 1)
    assert excinfo.value.condition == "p3_kp1_free"
    with pytest.raises(PreconditionError) as excinfo:
        check_lemma21(complete_graph(4), vset(0), 1)
    assert excinfo.value.condition == "cutset"
