"""Inserting one outside vertex into a cycle or a path."""

from enum import Enum
from typing import Any, List, Optional, Tuple

from ..config import get_settings
from ..graph import Cycle, Graph, Path, induced, popcount
from ..invariants import Rational, as_rational, exceeds_insertion_threshold
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..oracle import hamiltonian_cycle_oracle, hamiltonian_path_oracle
from ..utils.errors import ConstructionError, HypothesisError, PreconditionError
from .splice import SpliceLog

logger = get_logger(__name__)


class InsertionRung(str, Enum):
    CONSECUTIVE = "consecutive"
    END_EXTENSION = "end_extension"
    SUCCESSOR_CHORD = "successor_chord"
    PREDECESSOR_CHORD = "predecessor_chord"
    EXHAUSTIVE = "exhaustive"


def _on_walk_neighbors(g: Graph, verts: Tuple[int, ...], x: int) -> List[int]:
    return [v for v in verts if g.has_edge(x, v)]


def _successor_chord(verts: List[int], cyclic: bool, g: Graph, nbrs: List[int], x: int):
    """Neighbours u before v with u+ v+ adjacent: u x v v- .. u+ v+ replaces u .. v+."""
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    for u in nbrs:
        for v in nbrs:
            if u == v:
                continue
            i, j = index[u], index[v]
            if not cyclic and (i > j or j + 1 >= n):
                continue
            up, vp = verts[(i + 1) % n], verts[(j + 1) % n]
            if vp == u or up == v or not g.has_edge(up, vp):
                continue
            inner = [verts[(i + k) % n] for k in range(1, (j - i) % n + 1)]
            old = [u] + inner + [vp]
            new = [u, x] + inner[::-1] + [vp]
            return old, new
    return None


def _predecessor_chord(verts: List[int], cyclic: bool, g: Graph, nbrs: List[int], x: int):
    """Neighbours u before v with u- v- adjacent: u- v- .. u x v replaces u- .. v."""
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    for u in nbrs:
        for v in nbrs:
            if u == v:
                continue
            i, j = index[u], index[v]
            if not cyclic and (i > j or i == 0):
                continue
            um, vm = verts[(i - 1) % n], verts[(j - 1) % n]
            if vm == u or um == v or not g.has_edge(um, vm):
                continue
            inner = [verts[(i + k) % n] for k in range(0, (j - i) % n)]
            old = [um] + inner + [v]
            new = [um] + inner[::-1] + [x, v]
            return old, new
    return None


def _record(rung: InsertionRung, operation: str, x: int) -> None:
    get_metrics_collector().record_rung(rung.value)
    logger.debug(operation, vertex=x, rung=rung.value)


def _exhaustive_subgraph(g: Graph, keep: int, operation: str):
    limit = get_settings().insertion_search_max_n
    size = popcount(keep)
    if size > limit:
        return None
    get_metrics_collector().record_fallback(operation)
    logger.info("oracle_fallback", operation=operation, n=size)
    return induced(g, keep)


def insert_vertex(
    g: Graph,
    cycle: Cycle,
    x: int,
    t: Any,
    tough: bool = True,
    log: Optional[SpliceLog] = None,
) -> Cycle:
    """
    Build a cycle on V(C) + x.

    Tries, in order: x adjacent to two consecutive cycle vertices; two
    neighbours u, v of x whose successors (or predecessors) are adjacent;
    exhaustive search on V(C) + x. The rung that fired is recorded in the
    log tag and in metrics.

    Args:
        g: Host graph
        cycle: Cycle not containing x
        x: Vertex to insert
        t: Toughness the caller vouches for
        tough: Certificate flag that g is t-tough
        log: Optional log receiving the surgery step

    Returns:
        Cycle with vertex set V(C) + x

    Raises:
        PreconditionError: x lies on C or d_C(x) <= n/(t+1) - 1
        HypothesisError: the toughness certificate flag is false
        ConstructionError: no rung produced a cycle
    """
    if x in cycle:
        raise PreconditionError("outside_vertex", f"vertex {x} already lies on the cycle")
    t_value: Rational = as_rational(t)
    if not tough:
        raise HypothesisError("t_tough", f"graph is not certified {t}-tough")
    nbrs = _on_walk_neighbors(g, cycle.verts, x)
    if not exceeds_insertion_threshold(len(nbrs), g.n, t_value):
        raise PreconditionError(
            "insertion_degree", f"d_C({x}) = {len(nbrs)} is at most n/(t+1) - 1 for n={g.n}, t={t}"
        )
    log = log if log is not None else SpliceLog(cycle)
    if log.current != cycle:
        log.replace(cycle, "resync")

    for u in nbrs:
        w = cycle.successor(u)
        if g.has_edge(x, w):
            _record(InsertionRung.CONSECUTIVE, "insert_vertex", x)
            return log.apply((u, w), (u, x, w), InsertionRung.CONSECUTIVE.value)

    verts = list(cycle.verts)
    for rung, finder in (
        (InsertionRung.SUCCESSOR_CHORD, _successor_chord),
        (InsertionRung.PREDECESSOR_CHORD, _predecessor_chord),
    ):
        found = finder(verts, True, g, nbrs, x)
        if found:
            _record(rung, "insert_vertex", x)
            return log.apply(found[0], found[1], rung.value)

    sub = _exhaustive_subgraph(g, cycle.vertex_set | (1 << x), "insert_vertex")
    if sub is not None:
        h, mapping = sub
        answer = hamiltonian_cycle_oracle(h)
        if answer.yes:
            _record(InsertionRung.EXHAUSTIVE, "insert_vertex", x)
            result = Cycle([mapping[v] for v in answer.witness.verts])
            return log.replace(result, InsertionRung.EXHAUSTIVE.value)
    raise ConstructionError(
        "insert_vertex",
        f"no cycle on V(C) + {x} found",
        {"cycle": list(cycle.verts), "vertex": x, "neighbors": nbrs},
    )


def insert_vertex_into_path(
    g: Graph, path: Path, x: int, log: Optional[SpliceLog] = None
) -> Path:
    """
    Build a path on V(P) + x, keeping the ends of P where possible.

    Rungs: consecutive neighbours, successor or predecessor chords, then
    appending x at an end, then exhaustive search.

    Raises:
        PreconditionError: x lies on P
        ConstructionError: G[V(P) + x] has no hamiltonian path
    """
    if x in path:
        raise PreconditionError("outside_vertex", f"vertex {x} already lies on the path")
    log = log if log is not None else SpliceLog(path)
    if log.current != path:
        log.replace(path, "resync")
    nbrs = _on_walk_neighbors(g, path.verts, x)

    for u in nbrs:
        w = path.successor(u)
        if w >= 0 and g.has_edge(x, w):
            _record(InsertionRung.CONSECUTIVE, "insert_vertex_into_path", x)
            return log.apply((u, w), (u, x, w), InsertionRung.CONSECUTIVE.value)

    verts = list(path.verts)
    for rung, finder in (
        (InsertionRung.SUCCESSOR_CHORD, _successor_chord),
        (InsertionRung.PREDECESSOR_CHORD, _predecessor_chord),
    ):
        found = finder(verts, False, g, nbrs, x)
        if found:
            _record(rung, "insert_vertex_into_path", x)
            return log.apply(found[0], found[1], rung.value)

    if g.has_edge(x, path.end) or g.has_edge(x, path.start):
        _record(InsertionRung.END_EXTENSION, "insert_vertex_into_path", x)
        extended = path.verts + (x,) if g.has_edge(x, path.end) else (x,) + path.verts
        return log.replace(Path(extended), InsertionRung.END_EXTENSION.value)

    sub = _exhaustive_subgraph(g, path.vertex_set | (1 << x), "insert_vertex_into_path")
    if sub is not None:
        h, mapping = sub
        answer = hamiltonian_path_oracle(h)
        if answer.yes:
            _record(InsertionRung.EXHAUSTIVE, "insert_vertex_into_path", x)
            result = Path([mapping[v] for v in answer.witness.verts])
            return log.replace(result, InsertionRung.EXHAUSTIVE.value)
    raise ConstructionError(
        "insert_vertex_into_path",
        f"no path on V(P) + {x} found",
        {"path": list(path.verts), "vertex": x, "neighbors": nbrs},
    )
