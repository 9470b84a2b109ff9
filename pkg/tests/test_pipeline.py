"""Tests for the hamiltonian cycle construction and its building blocks."""

import random

import pytest

from src.generators import clique_join, complete_multipartite, planted_lemma_instance
from src.graph import (
    Cycle,
    Path,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    popcount,
    vset,
)
from src.monitoring.metrics import get_metrics_collector
from src.oracle import validate_cycle
from src.patterns import p3_union_kp1
from src.pipeline import (
    BranchTag,
    EvidenceKind,
    PipelineOptions,
    TheoremInstance,
    assemble_lemma27,
    claim1_glue,
    construct_hamiltonian_cycle,
    deficiency_split,
    disjoint_edge_count,
    heavy_clique_search,
    heavy_weight,
    min_degree_sum_pair,
    route_clique,
    split_pair_neighborhood,
)
from src.utils.errors import ConstructionError, HypothesisError, PreconditionError


@pytest.mark.parametrize(
    "g,t,condition",
    [
        (cycle_graph(6), 15, "toughness_certificate"),
        (p3_union_kp1(3), 15, "p3_3p1_free"),
        (complete_graph(5), 10, "toughness_threshold"),
        (complete_graph(2), 15, "order"),
    ],
)
def test_instance_hypotheses(g, t, condition):
    """Test each hypothesis failure is named."""
    with pytest.raises(HypothesisError) as excinfo:
        TheoremInstance.from_graph(g, t)
    assert excinfo.value.condition == condition


def test_instance_from_certified():
    """Test family certificates are trusted as analytic evidence."""
    inst = TheoremInstance.from_certified(clique_join(30, [1, 1]))
    assert inst.evidence.kind == EvidenceKind.ANALYTIC
    assert inst.evidence.label() == "analytic:family_formula:clique_join"


@pytest.mark.parametrize("n", [5, 40])
def test_complete_graphs_take_the_shortcut(n):
    """Test complete graphs are closed without decomposition."""
    trace = construct_hamiltonian_cycle(TheoremInstance.from_graph(complete_graph(n)))
    assert trace.branch_log == ["DIRAC_SHORTCUT", "SHORTCUT"]
    assert trace.success
    assert trace.cycle == list(range(n))


def test_certified_join_takes_the_shortcut():
    """Test a 15-tough clique join clears the minimum degree condition."""
    cg = clique_join(30, [1, 1])
    trace = construct_hamiltonian_cycle(TheoremInstance.from_certified(cg))
    assert trace.terminal == BranchTag.SHORTCUT.value
    assert trace.success
    assert validate_cycle(cg.graph, trace.cycle)
    assert trace.certificate["value"] == "15"


def test_component_assembly_branch():
    """Test the many-components regime on the planted instance."""
    cg = planted_lemma_instance("lemma27")
    inst = TheoremInstance.from_certified(cg)
    trace = construct_hamiltonian_cycle(inst, PipelineOptions(allow_shortcuts=False))
    assert trace.branch_log == ["DECOMPOSE", "LEMMA_2_7_ASSEMBLY"]
    assert trace.success
    assert len(trace.cycle) == 86
    assert trace.cycle[0] == 0
    assert trace.decomposition["S"] == list(range(75))


@pytest.mark.slow
def test_heavy_clique_branch():
    """Test the three-component regime on the planted instance."""
    cg = planted_lemma_instance("claim1")
    inst = TheoremInstance.from_certified(cg)
    trace = construct_hamiltonian_cycle(inst, PipelineOptions(allow_shortcuts=False))
    assert trace.branch_log == ["DECOMPOSE", "HEAVY_CLIQUE", "DEFICIENCY_SPLIT", "CLAIM1_GLUE"]
    assert trace.success
    assert len(trace.cycle) == 143


def test_failed_shortcut_goes_straight_to_the_oracle(monkeypatch, mocker):
    """Test a failed shortcut construction is not rerun before the oracle."""
    monkeypatch.setenv("TOUGHHAM_ORACLE_MAX_N", "40")
    construction = mocker.patch(
        "src.pipeline.driver.chvatal_erdos_construction",
        side_effect=ConstructionError("chvatal_erdos", "no extension"),
    )
    witness = Cycle([*range(29), 30, 29, 31])
    oracle = mocker.patch(
        "src.pipeline.driver.hamiltonian_cycle_oracle",
        return_value=mocker.Mock(yes=True, witness=witness),
    )
    cg = clique_join(30, [1, 1])
    trace = construct_hamiltonian_cycle(TheoremInstance.from_certified(cg))
    assert construction.call_count == 1
    oracle.assert_called_once()
    assert trace.branch_log == ["DIRAC_SHORTCUT", "ORACLE_FALLBACK"]
    assert trace.success
    assert trace.details["fallback_reason"] == "shortcut_construction"


def test_branch_metrics():
    """Test branch tags are counted."""
    collector = get_metrics_collector()
    before = collector.counts("toughham_pipeline_branch").get("SHORTCUT", 0.0)
    construct_hamiltonian_cycle(TheoremInstance.from_graph(complete_graph(4), "inf"))
    after = collector.counts("toughham_pipeline_branch").get("SHORTCUT", 0.0)
    assert after == before + 1


def test_min_degree_sum_pair():
    """Test the least nonadjacent pair of minimum degree sum."""
    assert min_degree_sum_pair(clique_join(2, [2, 2]).graph) == (2, 4)
    assert min_degree_sum_pair(complete_graph(4)) is None


def test_split_pair_neighborhood():
    """Test N(uv) splits into private sides and the cutset."""
    g = clique_join(2, [2, 2]).graph
    assert split_pair_neighborhood(g, 2, 4) == (vset(3), vset(5), vset(0, 1))


def test_disjoint_edge_count():
    """Test a perfect matching across K_{3,3}."""
    assert disjoint_edge_count(complete_bipartite(3, 3), vset(0, 1, 2), vset(3, 4, 5)) == 3


def test_route_clique():
    """Test spanning orders of a clique with pinned ends."""
    assert route_clique(vset(3, 4, 5), vset(4), vset(4, 5)) == [4, 3, 5]
    assert route_clique(vset(3), vset(3), vset(3)) == [3]
    assert route_clique(vset(3, 4), vset(3), vset(3)) is None


def test_heavy_clique_search():
    """Test the large component of the planted instance is heavy."""
    cg = planted_lemma_instance("claim1")
    q1 = cg.planted["Q1"]
    assert heavy_weight(cg.graph, q1) == 2
    assert heavy_clique_search(cg.graph, q1) == q1


def test_deficiency_split_with_deficient_vertex():
    """Test an outside vertex seeing one clique vertex is deficient."""
    cg = planted_lemma_instance("deficiency")
    split = deficiency_split(cg.graph, cg.planted["Q1"])
    assert split.s_prime == vset(4)
    assert split.s_star == vset(0)
    assert split.d1_star == vset(1, 2, 3)
    assert split.matching == {}


def test_deficiency_split_takes_the_maximum_deficiency_set():
    """Test S' maximizes the deficiency even when a larger deficient set exists."""
    cg = planted_lemma_instance("deficiency", q=8, attachments=[[0], [0], [1, 2, 3]])
    split = deficiency_split(cg.graph, cg.planted["Q1"])
    assert split.s_prime == vset(8, 9)
    assert split.s_double_prime == vset(10)
    assert split.s_star == vset(0, 10)
    assert set(split.matching[10]) < {1, 2, 3}
    assert len(split.matching[10]) == 2


def test_deficiency_split_without_deficiency():
    """Test S' is empty when every outside vertex has two private neighbours."""
    cg = planted_lemma_instance("deficiency", q=6, attachments=[[0, 1, 2], [3, 4, 5]])
    split = deficiency_split(cg.graph, cg.planted["Q1"])
    assert split.s_prime == 0
    assert split.s_star == vset(6, 7)
    assert split.d1_star == vset(0, 1, 2, 3, 4, 5)
    assert all(len(leaves) == 2 for leaves in split.matching.values())


def test_deficiency_split_needs_heavy_clique():
    """Test the weight inequality."""
    cg = planted_lemma_instance("deficiency", q=4, attachments=[[0], [1]])
    with pytest.raises(PreconditionError):
        deficiency_split(cg.graph, cg.planted["Q1"])


def test_claim1_glue_small():
    """Test gluing one excursion and a lone cutset vertex through a clique."""
    cg = planted_lemma_instance("deficiency", q=6, attachments=[[0, 1, 2], [3, 4, 5]])
    outcome = claim1_glue(cg.graph, vset(6, 7), vset(0, 1, 2, 3, 4, 5), [])
    assert outcome.cycle is not None
    assert validate_cycle(cg.graph, outcome.cycle)


def test_claim1_glue_rejects_malformed_family():
    """Test family paths must end in S*."""
    cg = planted_lemma_instance("deficiency", q=6, attachments=[[0, 1, 2], [3, 4, 5]])
    with pytest.raises(PreconditionError):
        claim1_glue(cg.graph, vset(6, 7), vset(0, 1, 2, 3), [Path((4, 5))])


def test_assembly_hypotheses():
    """Test the assembly refuses low toughness and too few components."""
    cg = planted_lemma_instance("lemma27")
    with pytest.raises(HypothesisError) as excinfo:
        assemble_lemma27(cg.graph, cg.planted["S"], 7)
    assert excinfo.value.condition == "toughness_threshold"
    small = clique_join(20, [3, 3, 3, 1])
    with pytest.raises(HypothesisError) as excinfo:
        assemble_lemma27(small.graph, small.planted["S"], 8)
    assert excinfo.value.condition == "component_count"


def test_assembly_on_planted_instance():
    """Test the assembled cycle spans the graph and replays from its log."""
    cg = planted_lemma_instance("lemma27")
    outcome = assemble_lemma27(cg.graph, cg.planted["S"], 15, check_freeness=False)
    assert outcome.cycle is not None
    assert validate_cycle(cg.graph, outcome.cycle)
    assert outcome.log.replay() == outcome.cycle
    assert popcount(outcome.cycle.vertex_set) == cg.graph.n


def _multipartite_parts(rng: random.Random):
    largest = rng.randint(1, 4)
    n = rng.randint(max(31, 16 * largest), 150)
    parts = [largest]
    while sum(parts) < n:
        parts.append(rng.randint(1, min(largest, n - sum(parts))))
    return parts


def _certified_mix():
    """Fifty certified 15-tough instances: multipartite with shortcuts, planted without."""
    rng = random.Random(2024)
    mix = [(complete_multipartite([2] * 32), True)]
    mix += [(complete_multipartite(_multipartite_parts(rng)), True) for _ in range(34)]
    for comps, s_size in [
        ([3, 3, 3, 1, 1], 75),
        ([2, 2, 2, 1, 1], 75),
        ([2, 2, 2, 2, 2], 75),
        ([4, 3, 2, 1, 1], 76),
        ([3, 3, 3, 3, 3], 80),
        ([2, 2, 2, 1, 1, 1], 90),
        ([5, 4, 3, 2, 1, 1], 90),
        ([2, 2, 2, 2, 1, 1, 1], 105),
    ]:
        mix.append((planted_lemma_instance("lemma27", components=comps, s_size=s_size), False))
    for clique, big, small in [(45, 92, (3, 3)), (45, 92, (2, 2)), (46, 94, (3, 2))]:
        cg = planted_lemma_instance("claim1", clique=clique, big=big, small=small)
        mix.append((cg, False))
    for ell in (5, 6, 7, 8):
        mix.append((planted_lemma_instance("lemma23", ell=ell, s_size=15 * ell), True))
    return mix


@pytest.mark.slow
def test_certified_suite_end_to_end():
    """Test every certified instance gets a validated cycle and each main branch fires."""
    mix = _certified_mix()
    assert len(mix) == 50
    terminals = set()
    for cg, shortcuts in mix:
        assert 31 <= cg.graph.n <= 150
        inst = TheoremInstance.from_certified(cg)
        trace = construct_hamiltonian_cycle(inst, PipelineOptions(allow_shortcuts=shortcuts))
        assert trace.success, (cg.provenance.label(), trace.branch_log, trace.details)
        assert validate_cycle(cg.graph, trace.cycle)
        terminals.add(trace.terminal)
    assert {"SHORTCUT", "LEMMA_2_7_ASSEMBLY", "CLAIM1_GLUE"} <= terminals
