"""Exact minimum path covers and longest paths by subset DP."""

from typing import List, Optional, Tuple

from ..config import get_settings
from ..graph import Graph, Path, full_mask, iter_bits, lowest, popcount
from ..monitoring.logger import get_logger
from ..monitoring.metrics import get_metrics_collector
from ..utils.errors import PreconditionError, SizeLimitError
from .hamiltonian import greedy_completion, reach_table

logger = get_logger(__name__)


def _path_through(g: Graph, table: List[int], part: int) -> Path:
    return Path(greedy_completion(g, table, lowest(table[part]), part))


def min_path_cover_oracle(g: Graph) -> Tuple[int, List[Path]]:
    """
    Smallest number of vertex-disjoint paths covering every vertex.

    Returns:
        (size, paths) with paths ordered by their smallest vertex

    Raises:
        SizeLimitError: n beyond cover_oracle_max_n
    """
    limit = get_settings().cover_oracle_max_n
    if g.n > limit:
        raise SizeLimitError("min_path_cover_oracle", g.n, limit)
    if g.n == 0:
        return 0, []
    full = full_mask(g.n)
    table, states = reach_table(g, full)
    size = 1 << g.n
    unset = g.n + 1
    best = [0] + [unset] * (size - 1)
    choice = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        while True:
            part = sub | low
            if table[part]:
                cand = best[mask ^ part] + 1
                if cand < best[mask]:
                    best[mask] = cand
                    choice[mask] = part
            if not sub:
                break
            sub = (sub - 1) & rest
    paths = []
    mask = full
    while mask:
        part = choice[mask]
        paths.append(_path_through(g, table, part))
        mask ^= part
    paths.sort(key=lambda p: min(p.verts))
    get_metrics_collector().record_oracle("subset_dp", "YES", states)
    logger.debug("min_path_cover_oracle", n=g.n, size=best[full])
    return best[full], paths


def longest_path(g: Graph, within: Optional[int] = None) -> Path:
    """
    A longest path of ``g[within]``.

    Ties go to the lexicographically least vertex set, then the least order
    through it.

    Raises:
        SizeLimitError: n beyond longest_path_max_n
    """
    limit = get_settings().longest_path_max_n
    if g.n > limit:
        raise SizeLimitError("longest_path", g.n, limit)
    allowed = full_mask(g.n) if within is None else within
    table, _ = reach_table(g, allowed)
    best_mask = 0
    best_size = 0
    for mask in range(1, 1 << g.n):
        if mask & ~allowed or not table[mask]:
            continue
        count = popcount(mask)
        if count > best_size or (count == best_size and _lex_before(mask, best_mask)):
            best_size = count
            best_mask = mask
    if not best_mask:
        raise PreconditionError("nonempty", "longest_path needs at least one vertex")
    return _path_through(g, table, best_mask)


def _lex_before(a: int, b: int) -> bool:
    return sorted(iter_bits(a)) < sorted(iter_bits(b))
