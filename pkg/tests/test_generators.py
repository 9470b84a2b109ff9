"""Unit tests for enumeration, random free graphs and certified families."""

from fractions import Fraction

import pytest

from src.generators import (
    CertifiedGraph,
    Provenance,
    ProvenanceKind,
    canonical_form,
    certify_brute_force,
    clique_join,
    complete_multipartite,
    enumerate_free,
    enumerate_small,
    multipartite_toughness,
    named_graph,
    planted_lemma_instance,
    random_free_graph,
    relabel,
)
from src.graph import cycle_graph, path_graph, popcount, vset
from src.invariants import INFINITY, toughness
from src.patterns import is_p3_kp1_free
from src.utils.errors import PreconditionError, SizeLimitError


@pytest.mark.parametrize("n,expected", [(3, 8), (4, 64)])
def test_labeled_counts(n, expected):
    """Test 2^(n choose 2) labeled graphs."""
    assert sum(1 for _ in enumerate_small(n)) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_unlabeled_counts(n, expected):
    """Test one graph per isomorphism class."""
    assert sum(1 for _ in enumerate_small(n, unlabeled=True)) == expected


def test_enumeration_limit():
    """Test orders beyond the enumeration envelope."""
    with pytest.raises(SizeLimitError):
        enumerate_small(9)


def test_free_stream_counts_p3_free_graphs():
    """Test P3-free graphs are one disjoint union of cliques per partition."""
    assert len(list(enumerate_free(6, 0))) == 11
    assert len(list(enumerate_free(1, 2))) == 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_free_stream_matches_filtered_enumeration(n):
    """Test the extension stream meets every free isomorphism class exactly once."""
    expected = [g for g in enumerate_small(n, unlabeled=True) if is_p3_kp1_free(g, 2)[0]]
    streamed = list(enumerate_free(n, 2))
    assert len(streamed) == len(expected)
    assert all(is_p3_kp1_free(g, 2)[0] and g.n == n for g in streamed)
    codes = {canonical_form(g)[0] for g in streamed}
    assert codes == {canonical_form(g)[0] for g in expected}


def test_free_stream_limit():
    """Test orders beyond the extension envelope."""
    with pytest.raises(SizeLimitError):
        enumerate_free(10, 2)


def test_canonical_form_is_invariant():
    """Test relabelling does not change the canonical code."""
    g = path_graph(5)
    shuffled = relabel(g, (4, 2, 0, 3, 1))
    assert shuffled != g
    assert canonical_form(shuffled)[0] == canonical_form(g)[0]


def test_random_free_graph_is_free_and_seeded():
    """Test the repair loop and reproducibility."""
    g = random_free_graph(9, 0.3, 1, seed=7)
    assert is_p3_kp1_free(g, 1)[0]
    assert random_free_graph(9, 0.3, 1, seed=7) == g
    assert is_p3_kp1_free(random_free_graph(10, 0.2, 3, seed=1), 3)[0]


def test_random_free_graph_probability():
    """Test p must lie in [0, 1]."""
    with pytest.raises(PreconditionError):
        random_free_graph(5, 1.5, 1, seed=0)


def test_certify_brute_force():
    """Test exact toughness and the least free k."""
    cg = certify_brute_force(cycle_graph(5))
    assert cg.toughness_bound == 1
    assert cg.freeness_k == 1
    assert cg.provenance.kind == ProvenanceKind.BRUTE_FORCE
    assert cg.reverify()
    assert cg.to_dict()["provenance"] == "brute_force"


def test_brute_force_certificates_are_small():
    """Test the brute-force envelope."""
    with pytest.raises(PreconditionError):
        CertifiedGraph(cycle_graph(19), Fraction(1), Provenance(ProvenanceKind.BRUTE_FORCE), 1)


def test_complete_multipartite():
    """Test the formula value and freeness record."""
    cg = complete_multipartite([2, 2, 2])
    assert cg.toughness_bound == 2
    assert cg.is_free_for(3)
    assert not cg.is_free_for(0)
    assert cg.reverify()
    assert cg.to_dict()["provenance"] == "family_formula:complete_multipartite"
    assert multipartite_toughness([1, 1, 1]) == INFINITY
    assert multipartite_toughness([3]) == 0


@pytest.mark.parametrize(
    "parts", [[1, 2], [2, 3], [1, 1, 2], [3, 3], [1, 1, 1], [2, 2, 3], [1, 4], [3]]
)
def test_multipartite_formula_matches_exact_toughness(parts):
    """Test the family formula against exact toughness at small orders."""
    cg = complete_multipartite(parts)
    assert toughness(cg.graph).value == multipartite_toughness(parts)


def test_clique_join():
    """Test blocks and the formula value against exact toughness."""
    cg = clique_join(3, [2, 1])
    assert cg.toughness_bound == Fraction(3, 2)
    assert cg.planted == {"S": vset(0, 1, 2), "components": [vset(3, 4), vset(5)]}
    assert toughness(cg.graph).value == cg.toughness_bound


def test_named_graphs():
    """Test the named builders."""
    assert named_graph("petersen").n == 10
    assert named_graph("cycle", 7).edge_count() == 7
    with pytest.raises(PreconditionError):
        named_graph("heawood")


def test_planted_instances():
    """Test the planted builders and their witnesses."""
    claim1 = planted_lemma_instance("claim1")
    assert claim1.graph.n == 143
    assert popcount(claim1.planted["Q1"]) == 92
    lemma23 = planted_lemma_instance("lemma23")
    assert lemma23.planted["s"] == 1
    assert planted_lemma_instance("deficiency").graph.n == 5
    insertion = planted_lemma_instance("insertion", rim=7)
    assert insertion.planted["vertex"] == 7


def test_planted_infeasible_parameters():
    """Test infeasible shapes and unknown kinds."""
    with pytest.raises(PreconditionError):
        planted_lemma_instance("lemma23", s_size=3)
    with pytest.raises(PreconditionError):
        planted_lemma_instance("lemma27", components=[3, 3, 1, 1, 1])
    with pytest.raises(PreconditionError):
        planted_lemma_instance("nonsense")
