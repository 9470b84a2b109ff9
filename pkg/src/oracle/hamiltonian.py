"""Exact hamiltonian cycle and path search.

Both methods return the lexicographically least witness: cycles start at
vertex 0 and paths at the smallest feasible start, so the bitmask DP and the
backtracking search agree vertex for vertex.
"""

from typing import List, Optional, Tuple

from ..config import get_settings
from ..graph import Cycle, Graph, Path, full_mask, iter_bits, lowest, popcount
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..utils.errors import PreconditionError, SizeLimitError
from .answers import Method, OracleAnswer, Verdict

logger = get_logger(__name__)


def reach_table(g: Graph, starts: int) -> Tuple[List[int], int]:
    """
    Held-Karp style reachability over vertex subsets.

    ``table[mask]`` is the set of vertices v such that some path starting in
    ``starts`` visits exactly ``mask`` and ends at v.

    Returns:
        (table, number of (mask, end) states expanded)
    """
    size = 1 << g.n
    table = [0] * size
    for v in iter_bits(starts):
        table[1 << v] = 1 << v
    states = 0
    adj = g.adj
    for mask in range(1, size):
        ends = table[mask]
        if not ends:
            continue
        for v in iter_bits(ends):
            states += 1
            ext = adj[v] & ~mask
            while ext:
                low = ext & -ext
                table[mask | low] |= low
                ext ^= low
    return table, states


def _pick_method(g: Graph, method: Optional[Method], operation: str) -> Method:
    settings = get_settings()
    if g.n > settings.oracle_max_n:
        raise SizeLimitError(operation, g.n, settings.oracle_max_n)
    if method is None:
        return Method.DP if g.n <= settings.oracle_dp_max_n else Method.BACKTRACK
    method = Method(method)
    if method == Method.DP and g.n > settings.oracle_dp_max_n:
        raise SizeLimitError(f"{operation}[dp]", g.n, settings.oracle_dp_max_n)
    return method


def _finish(answer: OracleAnswer, operation: str) -> OracleAnswer:
    method, verdict = answer.method.value, answer.verdict.value
    get_metrics_collector().record_oracle(method, verdict, answer.nodes_explored)
    logger.debug(operation, verdict=verdict, method=method, states=answer.nodes_explored)
    return answer


def _cycle_dp(g: Graph) -> OracleAnswer:
    full = full_mask(g.n)
    table, states = reach_table(g, 1)
    if not table[full] & g.adj[0]:
        return OracleAnswer(Verdict.NO, None, states, Method.DP)
    seq = [0]
    mask = 1
    v = 0
    while mask != full:
        for u in iter_bits(g.adj[v] & ~mask):
            rest = full & ~(mask | (1 << u))
            if table[rest | 1 | (1 << u)] >> u & 1:
                seq.append(u)
                mask |= 1 << u
                v = u
                break
    return OracleAnswer(Verdict.YES, Cycle(seq), states, Method.DP)


def _connected_within(g: Graph, allowed: int) -> bool:
    if not allowed:
        return True
    comp = allowed & -allowed
    frontier = comp
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp == allowed


def _cycle_backtrack(g: Graph) -> OracleAnswer:
    full = full_mask(g.n)
    seq = [0]
    counter = [0]

    def viable(mask: int, end: int) -> bool:
        open_set = full & ~mask
        boundary = open_set | (1 << end) | 1
        for u in iter_bits(open_set):
            if popcount(g.adj[u] & boundary) < 2:
                return False
        return _connected_within(g, open_set | (1 << end) | 1)

    def search(mask: int, end: int) -> bool:
        counter[0] += 1
        if mask == full:
            return bool(g.adj[end] & 1)
        if not viable(mask, end):
            return False
        for u in iter_bits(g.adj[end] & ~mask):
            seq.append(u)
            if search(mask | (1 << u), u):
                return True
            seq.pop()
        return False

    if search(1, 0):
        return OracleAnswer(Verdict.YES, Cycle(seq), counter[0], Method.BACKTRACK)
    return OracleAnswer(Verdict.NO, None, counter[0], Method.BACKTRACK)


def hamiltonian_cycle_oracle(g: Graph, method: Optional[Method] = None) -> OracleAnswer:
    """
    Decide hamiltonicity exactly.

    Args:
        g: Graph with n >= 3
        method: Force DP or backtracking; default DP up to the DP limit

    Returns:
        OracleAnswer with the lexicographically least cycle from vertex 0

    Raises:
        PreconditionError: n < 3
        SizeLimitError: n beyond the oracle envelope
    """
    if g.n < 3:
        raise PreconditionError("cycle_order", "hamiltonian cycles need n >= 3")
    chosen = _pick_method(g, method, "hamiltonian_cycle_oracle")
    if any(popcount(m) < 2 for m in g.adj):
        return _finish(OracleAnswer(Verdict.NO, None, 0, chosen), "hamiltonian_cycle_oracle")
    answer = _cycle_dp(g) if chosen == Method.DP else _cycle_backtrack(g)
    return _finish(answer, "hamiltonian_cycle_oracle")


def greedy_completion(g: Graph, table: List[int], start: int, cover: int) -> List[int]:
    """Lexicographically least path from ``start`` over ``cover`` guided by a completion table."""
    seq = [start]
    mask = 1 << start
    v = start
    while mask != cover:
        for u in iter_bits(g.adj[v] & cover & ~mask):
            rest = cover & ~mask
            if table[rest] >> u & 1:
                seq.append(u)
                mask |= 1 << u
                v = u
                break
    return seq


def _path_dp(g: Graph, u: Optional[int], v: Optional[int]) -> OracleAnswer:
    full = full_mask(g.n)
    if v is not None:
        table, states = reach_table(g, 1 << v)
        starts = (1 << u) if u is not None else table[full]
    else:
        table, states = reach_table(g, full)
        starts = table[full] if u is None else table[full] & (1 << u)
    if not starts:
        return OracleAnswer(Verdict.NO, None, states, Method.DP)
    if v is not None and u is not None and not table[full] >> u & 1:
        return OracleAnswer(Verdict.NO, None, states, Method.DP)
    seq = greedy_completion(g, table, lowest(starts), full)
    return OracleAnswer(Verdict.YES, Path(seq), states, Method.DP)


def _path_backtrack(g: Graph, u: Optional[int], v: Optional[int]) -> OracleAnswer:
    full = full_mask(g.n)
    counter = [0]
    seq: List[int] = []
    end_pin = v

    def search(mask: int, end: int) -> bool:
        counter[0] += 1
        if mask == full:
            return end_pin is None or end == end_pin
        open_set = full & ~mask
        if not _connected_within(g, open_set | (1 << end)):
            return False
        for w in iter_bits(g.adj[end] & open_set):
            if end_pin is not None and w == end_pin and mask | (1 << w) != full:
                continue
            seq.append(w)
            if search(mask | (1 << w), w):
                return True
            seq.pop()
        return False

    starts = [u] if u is not None else [s for s in range(g.n) if s != v or g.n == 1]
    for s in starts:
        seq[:] = [s]
        if search(1 << s, s):
            return OracleAnswer(Verdict.YES, Path(seq), counter[0], Method.BACKTRACK)
    return OracleAnswer(Verdict.NO, None, counter[0], Method.BACKTRACK)


def hamiltonian_path_oracle(
    g: Graph, u: Optional[int] = None, v: Optional[int] = None, method: Optional[Method] = None
) -> OracleAnswer:
    """
    Decide whether a hamiltonian path exists, optionally with pinned ends.

    Args:
        g: Graph with n >= 1
        u: Required start, or None
        v: Required end, or None
        method: Force DP or backtracking

    Returns:
        OracleAnswer with the lexicographically least path honouring the pins
    """
    if g.n < 1:
        raise PreconditionError("path_order", "hamiltonian paths need n >= 1")
    for end in (u, v):
        if end is not None and not 0 <= end < g.n:
            raise PreconditionError("vertex_range", f"vertex {end} outside 0..{g.n - 1}")
    if u is not None and u == v and g.n > 1:
        raise PreconditionError("distinct_ends", "pinned ends must differ")
    chosen = _pick_method(g, method, "hamiltonian_path_oracle")
    answer = _path_dp(g, u, v) if chosen == Method.DP else _path_backtrack(g, u, v)
    return _finish(answer, "hamiltonian_path_oracle")
