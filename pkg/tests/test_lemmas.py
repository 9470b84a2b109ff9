"""Tests for the registered lemma checks on hand-built instances."""

import pytest

from src.graph import Graph, complete_bipartite, cycle_graph, petersen_graph
from src.harness import LEMMAS, Instance, SourceSpec, get_lemma
from src.harness.lemmas import (
    assembly_instances,
    check_assembly,
    check_chvatal_erdos,
    check_cutset_structure,
    check_deficiency_split,
    check_kappa_tau,
    check_path_cover,
    check_star_matching,
    deficiency_instances,
)
from src.utils.errors import PreconditionError


def test_registry_ids_are_unique():
    """Test ids and aliases resolve to one check each."""
    ids = [lemma.lemma_id for lemma in LEMMAS]
    assert len(ids) == len(set(ids))
    assert get_lemma("result0").lemma_id == "2.1"
    assert get_lemma("  CE ").lemma_id == "CE"
    with pytest.raises(PreconditionError) as excinfo:
        get_lemma("9.9")
    assert excinfo.value.condition == "lemma_id"


def test_planted_only_checks_have_builders():
    """Test every planted-only check can source instances."""
    for lemma in LEMMAS:
        if lemma.planted_only:
            assert lemma.planted is not None


def test_cutset_structure_on_complete_bipartite():
    """Test every cutset of K_{2,3} satisfies the structure clauses."""
    result = check_cutset_structure(Instance(complete_bipartite(2, 3)))
    assert result.tested
    assert result.findings == []
    assert result.stats["cutsets"] > 0


def test_star_matching_check_agrees_with_hall():
    """Test a matchable and a deficient bipartite instance."""
    matchable = Graph.from_edges(6, [(0, 2), (0, 3), (0, 4), (1, 4), (1, 5)])
    result = check_star_matching(Instance(matchable, {"x": 2, "f": [2, 2]}))
    assert result.findings == []
    assert result.stats["matchings"] == 1

    deficient = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    result = check_star_matching(Instance(deficient, {"x": 2, "f": [2, 2]}))
    assert result.findings == []
    assert result.stats["deficient_sets"] == 1


def test_kappa_tau_skips_complete_graphs():
    """Test only connected noncomplete graphs are tested."""
    assert not check_kappa_tau(Instance(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))).tested
    assert check_kappa_tau(Instance(petersen_graph())).tested


def test_path_cover_check():
    """Test the constructive cover against the oracle on small graphs."""
    for g in (cycle_graph(5), complete_bipartite(2, 4), complete_bipartite(3, 3)):
        result = check_path_cover(Instance(g))
        assert result.tested
        assert result.findings == []


def test_chvatal_erdos_check():
    """Test the path and cycle cases on K_{3,3}."""
    result = check_chvatal_erdos(Instance(complete_bipartite(3, 3)))
    assert result.tested
    assert result.findings == []
    assert result.stats["cycle_case"] == 1


def test_assembly_check_on_planted_instance():
    """Test one seeded assembly instance."""
    inst = next(assembly_instances(SourceSpec(kind="planted", samples=1, seed=5)))
    result = check_assembly(inst)
    assert result.tested
    assert result.findings == []


def test_deficiency_check_on_planted_instances():
    """Test seeded deficiency-split instances."""
    for inst in deficiency_instances(SourceSpec(kind="planted", samples=5, seed=6)):
        result = check_deficiency_split(inst)
        assert result.findings == []
