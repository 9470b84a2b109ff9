"""The end-to-end hamiltonian cycle construction for tough (P3 u 3P1)-free graphs."""

from dataclasses import replace
from typing import Any, Dict, List, Optional

import networkx as nx
from networkx.algorithms.bipartite import hopcroft_karp_matching

from ..config import get_settings
from ..graph import Cycle, Graph, components, is_complete, iter_bits
from ..invariants import dirac_type_check
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..oracle import hamiltonian_cycle_oracle, validate_cycle
from ..paths import SpliceLog, chvatal_erdos_construction
from ..utils.errors import (
    AnomalyError,
    ConstructionError,
    HypothesisError,
    PreconditionError,
    SizeLimitError,
)
from ..utils.helpers import format_rational
from .assembly import assemble_lemma27
from .decomposition import DecompositionState, PipelineOptions, Shortcut, decompose
from .deficiency import deficiency_split
from .gluing import build_path_family, claim1_glue
from .heavy_clique import heavy_clique_search
from .instance import TheoremInstance
from .trace import BranchTag, CycleTrace

logger = get_logger(__name__)


def disjoint_edge_count(g: Graph, a: int, b: int) -> int:
    """Maximum number of pairwise disjoint edges between disjoint sets A and B."""
    net = nx.Graph()
    tops = list(iter_bits(a))
    net.add_nodes_from(tops)
    net.add_nodes_from(iter_bits(b))
    for x in tops:
        for y in iter_bits(g.adj[x] & b):
            net.add_edge(x, y)
    return len(hopcroft_karp_matching(net, top_nodes=tops)) // 2


class _Run:
    """Branch log of one run, sealed by exactly one terminal tag."""

    def __init__(self, inst: TheoremInstance):
        self.inst = inst
        self.branch_log: List[str] = []
        self.details: Dict[str, Any] = {}
        self.state: Optional[DecompositionState] = None
        self.metrics = get_metrics_collector()

    def mark(self, tag: BranchTag) -> None:
        self.branch_log.append(tag.value)
        self.metrics.record_branch(tag.value)

    def finish(
        self, tag: BranchTag, cycle: Optional[Cycle] = None, log: Optional[SpliceLog] = None
    ) -> CycleTrace:
        g = self.inst.g
        validated = cycle is not None and validate_cycle(g, cycle)
        if cycle is not None and not validated:
            logger.warning("cycle_rejected", branch=tag.value, cycle=list(cycle.verts))
            self.details["rejected"] = {"branch": tag.value, "cycle": list(cycle.verts)}
            tag, cycle, log = BranchTag.FAILURE, None, None
        self.mark(tag)
        logger.info("pipeline_finished", n=g.n, terminal=tag.value, branches=self.branch_log)
        return CycleTrace(
            n=g.n,
            t=format_rational(self.inst.t),
            certificate=self.inst.evidence.to_dict(),
            cycle=None if cycle is None else list(cycle.normalized().verts),
            branch_log=self.branch_log,
            terminal=tag.value,
            validated=validated,
            splice_log=None if log is None else log.to_dict(),
            decomposition=None if self.state is None else self.state.to_dict(),
            details=self.details,
        )


def _constructive_cycle(run: _Run, terminal: BranchTag) -> Optional[CycleTrace]:
    """Chvatal-Erdos construction, sealed with ``terminal`` on success."""
    try:
        cycle, log = chvatal_erdos_construction(run.inst.g)
    except (PreconditionError, ConstructionError, SizeLimitError) as e:
        run.details["chvatal_erdos"] = str(e)
        return None
    return run.finish(terminal, cycle, log)


def _fallback(run: _Run, reason: str, skip_constructive: bool = False) -> CycleTrace:
    """Finish an uncovered case with the Chvatal-Erdos construction, then the exact oracle.

    ``skip_constructive`` goes straight to the oracle when the construction
    already failed on this graph.
    """
    g = run.inst.g
    run.details.setdefault("fallback_reason", reason)
    logger.info("pipeline_fallback", reason=reason, n=g.n)
    if not skip_constructive:
        done = _constructive_cycle(run, BranchTag.CHVATAL_ERDOS)
        if done is not None:
            return done
    if g.n <= get_settings().oracle_max_n:
        run.metrics.record_fallback("construct_hamiltonian_cycle")
        logger.info("oracle_fallback", operation="construct_hamiltonian_cycle", n=g.n)
        answer = hamiltonian_cycle_oracle(g)
        if answer.yes:
            return run.finish(BranchTag.ORACLE_FALLBACK, answer.witness, SpliceLog(answer.witness))
        run.details["oracle"] = answer.verdict.value
    return run.finish(BranchTag.FAILURE)


def _shortcut(run: _Run) -> CycleTrace:
    g = run.inst.g
    if is_complete(g):
        cycle = Cycle(range(g.n))
        return run.finish(BranchTag.SHORTCUT, cycle, SpliceLog(cycle))
    done = _constructive_cycle(run, BranchTag.SHORTCUT)
    if done is not None:
        return done
    return _fallback(run, "shortcut_construction", skip_constructive=True)


def _lemma27_regime(run: _Run, state: DecompositionState) -> CycleTrace:
    try:
        outcome = assemble_lemma27(run.inst.g, state.s, run.inst.t, check_freeness=False)
    except (HypothesisError, AnomalyError) as e:
        run.details["assembly"] = str(e)
        return _fallback(run, "assembly_hypotheses")
    run.details["assembly"] = outcome.to_dict()
    if outcome.cycle is None:
        return _fallback(run, "assembly")
    return run.finish(BranchTag.LEMMA_2_7_ASSEMBLY, outcome.cycle, outcome.log)


def _flag_gap(run: _Run, s_star: int, d1_star: int) -> None:
    """Mark the regime with two or three disjoint D2*-S* edges; no constructive case covers it."""
    g = run.inst.g
    rest = [c for c in components(g, s_star) if not c & d1_star]
    if len(rest) != 1:
        return
    edges = disjoint_edge_count(g, rest[0], s_star)
    if 2 <= edges <= 3:
        run.mark(BranchTag.GAP_FLAG)
        run.details["gap_disjoint_edges"] = edges


def _heavy_clique_regime(
    run: _Run, state: DecompositionState, options: PipelineOptions
) -> CycleTrace:
    g = run.inst.g
    run.mark(BranchTag.HEAVY_CLIQUE)
    q1 = heavy_clique_search(g, state.d1, options.budget())
    if q1 is None:
        return _fallback(run, "heavy_clique_missing")
    try:
        split = deficiency_split(g, q1)
    except (PreconditionError, AnomalyError) as e:
        run.details["deficiency_split"] = str(e)
        return _fallback(run, "deficiency_split")
    run.mark(BranchTag.DEFICIENCY_SPLIT)
    run.state = replace(
        state,
        q1=q1,
        s_prime=split.s_prime,
        s_double_prime=split.s_double_prime,
        s_star=split.s_star,
        d1_star=split.d1_star,
    )
    family = build_path_family(g, q1, split.s_star)
    if family is None:
        _flag_gap(run, split.s_star, split.d1_star)
        return _fallback(run, "path_family")
    outcome = claim1_glue(g, split.s_star, split.d1_star, family)
    if outcome.cycle is None:
        run.details["glue"] = {"reason": outcome.reason, **outcome.details}
        _flag_gap(run, split.s_star, split.d1_star)
        return _fallback(run, "claim1_glue")
    return run.finish(BranchTag.CLAIM1_GLUE, outcome.cycle, SpliceLog(outcome.cycle))


def construct_hamiltonian_cycle(
    inst: TheoremInstance, options: Optional[PipelineOptions] = None
) -> CycleTrace:
    """
    Construct a hamiltonian cycle of a checked theorem instance.

    Order: the Dirac-type and degree-sum shortcuts, then the decomposition
    around a low-degree pair. Five or more components of G - S with three
    nontrivial ones go to the component assembly; otherwise a heavy clique
    is split and the remaining vertices are glued through D1*. Cases no
    constructive branch covers finish with the Chvatal-Erdos construction
    or the exact oracle, and say so in the trace.

    Args:
        inst: Theorem instance (hypotheses already checked)
        options: Pipeline switches

    Returns:
        CycleTrace with exactly one terminal tag; its cycle, when present,
        has passed the independent validator
    """
    options = options or PipelineOptions()
    run = _Run(inst)
    g = inst.g
    if is_complete(g) or (options.allow_shortcuts and dirac_type_check(g, inst.t)):
        run.mark(BranchTag.DIRAC_SHORTCUT)
        return _shortcut(run)

    try:
        state = decompose(inst, options)
    except AnomalyError as e:
        run.details["decompose"] = {"error": str(e), **e.details}
        return _fallback(run, "decompose")
    if isinstance(state, Shortcut):
        run.mark(BranchTag.DEGREE_SUM_SHORTCUT)
        return _shortcut(run)

    run.mark(BranchTag.DECOMPOSE)
    run.state = state
    if state.w >= 5 and state.nontrivial >= 3:
        return _lemma27_regime(run, state)
    return _heavy_clique_regime(run, state, options)
