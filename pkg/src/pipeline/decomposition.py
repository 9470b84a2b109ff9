"""Splitting N(u) u N(v) of a low-degree nonadjacent pair into N_u, N_v and the cutset S."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from ..config import get_settings
from ..graph import Graph, components, is_complete, iter_bits, members, popcount
from ..invariants import degree_sum_check, is_proper_cutset
from ..monitoring.logger import get_logger
from ..utils.errors import AnomalyError
from .instance import TheoremInstance

logger = get_logger(__name__)


@dataclass(frozen=True)
class PipelineOptions:
    """Switches for a pipeline run.

    ``allow_shortcuts`` False skips the degree-based shortcuts so that the
    decomposition branches run even when a shortcut would apply.
    ``heavy_clique_budget`` None means the configured budget.
    """

    allow_shortcuts: bool = True
    heavy_clique_budget: Optional[int] = None

    def budget(self) -> int:
        if self.heavy_clique_budget is None:
            return get_settings().heavy_clique_budget
        return self.heavy_clique_budget


class ShortcutKind(str, Enum):
    COMPLETE = "complete"
    DIRAC = "dirac"
    DEGREE_SUM = "degree_sum"


@dataclass(frozen=True)
class Shortcut:
    kind: ShortcutKind
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DecompositionState:
    """The pair (u, v), the split of N(uv) and the sets derived from the cutset S.

    The heavy-clique fields stay None until that regime fills them in.
    """

    u: int
    v: int
    n_u: int
    n_v: int
    s: int
    d1: int
    components: Tuple[int, ...]
    q1: Optional[int] = None
    s_prime: Optional[int] = None
    s_double_prime: Optional[int] = None
    s_star: Optional[int] = None
    d1_star: Optional[int] = None

    @property
    def w(self) -> int:
        return len(self.components)

    @property
    def nontrivial(self) -> int:
        return sum(1 for c in self.components if popcount(c) >= 2)

    def to_dict(self) -> Dict[str, Any]:
        def opt(mask: Optional[int]) -> Optional[list]:
            return None if mask is None else members(mask)

        return {
            "u": self.u,
            "v": self.v,
            "N_u": members(self.n_u),
            "N_v": members(self.n_v),
            "S": members(self.s),
            "D1": members(self.d1),
            "components": [members(c) for c in self.components],
            "Q1": opt(self.q1),
            "S_prime": opt(self.s_prime),
            "S_double_prime": opt(self.s_double_prime),
            "S_star": opt(self.s_star),
            "D1_star": opt(self.d1_star),
        }


def min_degree_sum_pair(g: Graph) -> Optional[Tuple[int, int]]:
    """Lexicographically least nonadjacent pair of minimum degree sum; None for complete graphs."""
    degrees = [popcount(m) for m in g.adj]
    best: Optional[Tuple[int, int, int]] = None
    for u in range(g.n):
        for v in iter_bits(g.vertices & ~g.adj[u] & ~((2 << u) - 1)):
            key = (degrees[u] + degrees[v], u, v)
            if best is None or key < best:
                best = key
    return None if best is None else (best[1], best[2])


def split_pair_neighborhood(g: Graph, u: int, v: int) -> Tuple[int, int, int]:
    """
    Split N(uv) = N(u) u N(v) into N_u, N_v and S.

    N_u holds the x in N(uv) with N(x) inside {u} u N(uv); N_v holds the
    remaining x whose neighbourhood lies inside {v} u (N(uv) - N_u); S is
    what is left.

    Returns:
        (N_u, N_v, S)
    """
    nuv = g.adj[u] | g.adj[v]
    n_u = 0
    for x in iter_bits(nuv):
        if not g.adj[x] & ~(nuv | 1 << u):
            n_u |= 1 << x
    rest = nuv & ~n_u
    n_v = 0
    for x in iter_bits(rest):
        if not g.adj[x] & ~(rest | 1 << v):
            n_v |= 1 << x
    return n_u, n_v, nuv & ~(n_u | n_v)


def decompose(
    inst: TheoremInstance, options: Optional[PipelineOptions] = None
) -> Union[DecompositionState, Shortcut]:
    """
    Decompose around a nonadjacent pair of minimum degree sum.

    Args:
        inst: Checked theorem instance
        options: Pipeline switches

    Returns:
        Shortcut when the degree-sum condition holds (and shortcuts are
        allowed) or the graph is complete; otherwise the decomposition,
        with D1 the component of G - S holding a largest component of
        G - N(uv)

    Raises:
        AnomalyError: S is not a proper cutset, or w(G - S) differs from
            w(G - N(uv)) or is below 3
    """
    options = options or PipelineOptions()
    g = inst.g
    if is_complete(g):
        return Shortcut(ShortcutKind.COMPLETE)
    if options.allow_shortcuts:
        holds, _ = degree_sum_check(g, inst.t)
        if holds:
            return Shortcut(ShortcutKind.DEGREE_SUM)

    u, v = min_degree_sum_pair(g)
    n_u, n_v, s = split_pair_neighborhood(g, u, v)
    nuv = g.adj[u] | g.adj[v]
    comps = components(g, s)
    outer = components(g, nuv)
    details = {"u": u, "v": v, "S": members(s), "w": len(comps)}
    if len(comps) < 2 or not is_proper_cutset(g, s):
        raise AnomalyError("decompose", "S is not a proper cutset", details)
    if len(comps) != len(outer) or len(comps) < 3:
        raise AnomalyError(
            "decompose",
            f"w(G - S) = {len(comps)} but w(G - N(uv)) = {len(outer)}; need equal and >= 3",
            details,
        )

    largest = max(outer, key=popcount)
    d1 = next(c for c in comps if c & largest)
    state = DecompositionState(u, v, n_u, n_v, s, d1, tuple(comps))
    logger.debug("decomposed", u=u, v=v, s_size=popcount(s), w=state.w, d1_size=popcount(d1))
    return state
