"""Lemma suite runs: source graphs, run one check per graph, aggregate a report."""

import hashlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..config import get_settings
from ..monitoring.logger import get_logger, log_context
from ..monitoring.metrics import get_metrics_collector
from ..utils.errors import PreconditionError
from ..utils.helpers import elapsed_since, get_timestamp
from .formats import emit_graph6, parse_graph6
from .lemmas import CheckResult, LemmaCheck, get_lemma
from .sources import (
    Instance,
    SourceSpec,
    enumerated_instances,
    free_instances,
    random_instances,
)

logger = get_logger(__name__)

# instances per worker task
CHUNK_SIZE = 32


class Violation(BaseModel):
    graph6: str
    clause: str
    details: Dict[str, Any] = Field(default_factory=dict)


class LemmaReport(BaseModel):
    """Aggregated outcome of one suite run; empty ``violations`` means the check passed."""

    schema_version: int = 1
    lemma_id: str
    source: Dict[str, Any]
    instances_sourced: int = 0
    instances_tested: int = 0
    violations: List[Violation] = Field(default_factory=list)
    statistics: Dict[str, int] = Field(default_factory=dict)
    runtime: float = 0.0
    seed: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def fingerprint(self) -> str:
        """Digest of everything except the runtime; equal seeds and budgets give equal digests."""
        payload = self.model_dump_json(exclude={"runtime"})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _source_defaults(lemma: LemmaCheck) -> Dict[str, Any]:
    suites = get_settings().load_suite_defaults()
    return dict(suites.get(lemma.lemma_id, {}))


def resolve_source(lemma_id: str, overrides: Optional[Dict[str, Any]] = None) -> SourceSpec:
    """
    Suite source from the config defaults with ``overrides`` on top.

    Planted-only checks always use their own instance builder.
    """
    lemma = get_lemma(lemma_id)
    values = _source_defaults(lemma)
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    if lemma.planted_only:
        values["kind"] = "planted"
    return SourceSpec(**values)


def _instances(lemma: LemmaCheck, source: SourceSpec) -> Iterator[Instance]:
    if source.kind == "planted":
        if lemma.planted is None:
            raise PreconditionError("source_kind", f"{lemma.lemma_id} has no planted instances")
        return lemma.planted(source)
    if lemma.planted_only:
        raise PreconditionError("source_kind", f"{lemma.lemma_id} runs on planted instances only")
    if source.kind == "random":
        return random_instances(source)
    if source.kind == "free":
        return free_instances(source)
    return enumerated_instances(source)


Task = Tuple[str, str, Dict[str, Any]]


def _evaluate(task: Task) -> Tuple[str, Dict[str, Any], CheckResult]:
    """Run one check from its graph6 encoding; module level so worker processes can import it."""
    lemma_id, graph6, params = task
    result = get_lemma(lemma_id).check(Instance(parse_graph6(graph6), params))
    return graph6, params, result


def _evaluate_chunk(tasks: List[Task]) -> List[Tuple[str, Dict[str, Any], CheckResult]]:
    return [_evaluate(task) for task in tasks]


def _chunks(tasks: Iterator[Task]) -> Iterator[List[Task]]:
    while True:
        chunk = list(islice(tasks, CHUNK_SIZE))
        if not chunk:
            return
        yield chunk


def run_lemma_suite(
    lemma_id: str, source: Optional[SourceSpec] = None, budget: Optional[int] = None
) -> LemmaReport:
    """
    Run a registered check over a graph source.

    Args:
        lemma_id: Registered id or alias
        source: Graph source; defaults come from the suite config
        budget: Maximum number of sourced instances, or None for all

    Returns:
        LemmaReport with violations sorted by graph6 string

    Raises:
        PreconditionError: unknown lemma id, or a source kind the check
            does not support
    """
    lemma = get_lemma(lemma_id)
    source = source or resolve_source(lemma.lemma_id)
    if lemma.planted_only and source.kind != "planted":
        source = source.model_copy(update={"kind": "planted"})
    start = get_timestamp()
    stream = _instances(lemma, source)
    if budget is not None:
        stream = islice(stream, budget)
    tasks = ((lemma.lemma_id, emit_graph6(inst.graph), inst.params) for inst in stream)

    threads = get_settings().threads
    with log_context(lemma=lemma.lemma_id):
        logger.info("lemma_suite_started", source=source.kind, threads=threads)
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                chunks = pool.map(_evaluate_chunk, _chunks(tasks))
                outcomes = [out for chunk in chunks for out in chunk]
        else:
            outcomes = [_evaluate(task) for task in tasks]

    stats: Counter = Counter()
    violations: List[Violation] = []
    tested = 0
    for graph6, params, result in outcomes:
        stats.update(result.stats)
        if not result.tested:
            continue
        tested += 1
        for clause, details in result.findings:
            if params:
                details = {**details, "instance": params}
            violations.append(Violation(graph6=graph6, clause=clause, details=details))
    violations.sort(key=lambda v: (v.graph6, v.clause))

    report = LemmaReport(
        lemma_id=lemma.lemma_id,
        source=source.model_dump(),
        instances_sourced=len(outcomes),
        instances_tested=tested,
        violations=violations,
        statistics=dict(sorted(stats.items())),
        runtime=elapsed_since(start),
        seed=source.seed,
    )
    get_metrics_collector().record_lemma(lemma.lemma_id, tested, len(violations))
    logger.info(
        "lemma_suite_finished",
        lemma=lemma.lemma_id,
        sourced=report.instances_sourced,
        tested=tested,
        violations=len(violations),
        runtime=report.runtime,
    )
    return report


def replay_violation(lemma_id: str, violation: Violation) -> CheckResult:
    """Rerun the check on a reported graph; the finding reappears when the violation is real."""
    params = violation.details.get("instance", {})
    return _evaluate((get_lemma(lemma_id).lemma_id, violation.graph6, params))[2]
