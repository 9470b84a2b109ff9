"""Search for nonhamiltonian (P3 u 3P1)-free graphs of high toughness."""

import random
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from ..generators import MAX_ENUMERATION_N, enumerate_small, random_free_graph
from ..graph import Graph, is_complete, is_connected, members
from ..invariants import Rational, as_rational, toughness
from ..monitoring.logger import get_logger
from ..oracle import hamiltonian_cycle_oracle
from ..patterns import is_p3_kp1_free
from ..utils.errors import PreconditionError
from ..utils.helpers import elapsed_since, format_rational, get_timestamp
from .formats import emit_graph6

logger = get_logger(__name__)

SEARCH_MAX_N = 18
ENUMERATE_MAX_N = 7


class TightnessRecord(BaseModel):
    graph6: str
    n: int
    edges: int
    toughness: str
    tough_set: List[int]
    nonhamiltonian: bool = True
    origin: str


class TightnessReport(BaseModel):
    schema_version: int = 1
    t_max: str
    n_max: int
    budget: int
    seed: int
    graphs_examined: int = 0
    candidates: int = 0
    records: List[TightnessRecord] = Field(default_factory=list)
    max_toughness: Optional[str] = None
    counterexamples: List[TightnessRecord] = Field(default_factory=list)
    runtime: float = 0.0


def _candidates(
    n_max: int, budget: int, seed: int, enumerate_max_n: int
) -> Iterator[Tuple[Graph, str]]:
    for n in range(3, min(n_max, enumerate_max_n, MAX_ENUMERATION_N) + 1):
        for g in enumerate_small(n, unlabeled=True):
            if is_p3_kp1_free(g, 3)[0]:
                yield g, "enumerate"
    if n_max < 3:
        return
    rng = random.Random(seed)
    for _ in range(budget):
        n = rng.randint(3, n_max)
        yield random_free_graph(n, rng.uniform(0.05, 0.7), 3, rng.randrange(2**32)), "random"


def _distinct(records: List[Tuple[TightnessRecord, Graph]]) -> List[TightnessRecord]:
    """One record per isomorphism class, the least graph6 string of each class winning."""
    kept: Dict[str, List[nx.Graph]] = {}
    out: List[TightnessRecord] = []
    for record, g in sorted(records, key=lambda pair: pair[0].graph6):
        nxg = g.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(nxg)
        bucket = kept.setdefault(key, [])
        if any(nx.is_isomorphic(nxg, other) for other in bucket):
            continue
        bucket.append(nxg)
        out.append(record)
    return out


def tightness_search(
    t_max: Rational = Fraction(15),
    n_max: int = 7,
    budget: int = 0,
    seed: int = 0,
    enumerate_max_n: int = ENUMERATE_MAX_N,
) -> TightnessReport:
    """
    Collect connected nonhamiltonian (P3 u 3P1)-free graphs with their exact toughness.

    Every graph on 3..min(n_max, enumerate_max_n) vertices is enumerated up to
    isomorphism, then ``budget`` seeded random free graphs of order at most
    n_max are drawn.

    Args:
        t_max: Toughness at which a find counts as a counterexample
        n_max: Largest order, at most 18
        budget: Random samples
        seed: Seed of the random phase
        enumerate_max_n: Largest enumerated order

    Returns:
        TightnessReport with records sorted by graph6, one per isomorphism class

    Raises:
        PreconditionError: n_max beyond the exact toughness envelope
    """
    if n_max > SEARCH_MAX_N:
        raise PreconditionError("search_size", f"n_max={n_max} exceeds {SEARCH_MAX_N}")
    t_bound = as_rational(t_max)
    start = get_timestamp()
    examined = candidates = 0
    found: List[Tuple[TightnessRecord, Graph]] = []
    for g, origin in _candidates(n_max, budget, seed, enumerate_max_n):
        examined += 1
        if not is_connected(g) or is_complete(g):
            continue
        candidates += 1
        if hamiltonian_cycle_oracle(g).yes:
            continue
        cert = toughness(g, limit=SEARCH_MAX_N)
        record = TightnessRecord(
            graph6=emit_graph6(g),
            n=g.n,
            edges=g.edge_count(),
            toughness=format_rational(cert.value),
            tough_set=members(cert.tough_set or 0),
            origin=origin,
        )
        found.append((record, g))

    records = _distinct(found)
    values = {r.graph6: as_rational(r.toughness) for r in records}
    best = max(values.values(), default=None)
    report = TightnessReport(
        t_max=format_rational(t_bound),
        n_max=n_max,
        budget=budget,
        seed=seed,
        graphs_examined=examined,
        candidates=candidates,
        records=records,
        max_toughness=None if best is None else format_rational(best),
        counterexamples=[r for r in records if values[r.graph6] >= t_bound],
        runtime=elapsed_since(start),
    )
    logger.info(
        "tightness_search_finished",
        examined=examined,
        records=len(records),
        max_toughness=report.max_toughness,
        counterexamples=len(report.counterexamples),
    )
    return report
