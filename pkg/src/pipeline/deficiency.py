"""The split of N(Q1) into a maximal deficient part S' and the matched rest S''."""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..graph import Graph, is_complete, iter_bits, members, neighborhood, popcount, vset
from ..matching import DeficientSet, max_deficiency_set, star_matching
from ..monitoring.logger import get_logger
from ..utils.errors import AnomalyError, PreconditionError

logger = get_logger(__name__)


@dataclass(frozen=True)
class DeficiencySplit:
    """S', S'', S* = N_Q1(S') u S'', D1* = Q1 - N_Q1(S') and the K_{1,2}-matching of S''."""

    q1: int
    s_prime: int
    s_double_prime: int
    s_star: int
    d1_star: int
    matching: Dict[int, Tuple[int, ...]]
    deficiency: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "Q1": members(self.q1),
            "S_prime": members(self.s_prime),
            "S_double_prime": members(self.s_double_prime),
            "S_star": members(self.s_star),
            "D1_star": members(self.d1_star),
            "matching": {str(x): list(leaves) for x, leaves in self.matching.items()},
            "deficiency": self.deficiency,
        }


def deficiency_split(g: Graph, q1: int) -> DeficiencySplit:
    """
    Split N_G(Q1) around its maximal deficient subset.

    S' is the maximal subset of N_G(Q1) maximizing 2|S'| - |N_Q1(S')|, read
    off a minimum cut; it is empty when no subset is deficient. The rest S''
    then has a K_{1,2}-matching into Q1 - N_Q1(S'). The split relies on that
    Hall property of S'' alone; a larger deficient subset may exist.

    Args:
        g: Host graph
        q1: Clique with |Q1| - 2|N_G(Q1)| >= 2

    Returns:
        DeficiencySplit

    Raises:
        PreconditionError: Q1 is not a clique or fails the weight inequality
        AnomalyError: |D1*| < 2 or S'' has no K_{1,2}-matching
    """
    if not q1 or not is_complete(g, q1):
        raise PreconditionError("clique", "Q1 must be a nonempty clique")
    boundary = neighborhood(g, q1)
    if popcount(q1) - 2 * popcount(boundary) < 2:
        raise PreconditionError(
            "heavy_clique", f"|Q1| - 2|N(Q1)| = {popcount(q1) - 2 * popcount(boundary)} < 2"
        )

    xs = members(boundary)
    adj = {x: members(g.adj[x] & q1) for x in xs}
    chosen, deficiency = max_deficiency_set(xs, adj, {x: 2 for x in xs})
    s_prime = vset(*chosen) if deficiency > 0 else 0
    s_double_prime = boundary & ~s_prime
    hit = 0
    for x in iter_bits(s_prime):
        hit |= g.adj[x] & q1
    s_star = hit | s_double_prime
    d1_star = q1 & ~hit
    if popcount(d1_star) < 2:
        raise AnomalyError(
            "deficiency_split", f"|D1*| = {popcount(d1_star)} < 2", {"Q1": members(q1)}
        )

    remaining = members(s_double_prime)
    result = star_matching(
        remaining,
        members(d1_star),
        {x: members(g.adj[x] & d1_star) for x in remaining},
        {x: 2 for x in remaining},
    )
    if isinstance(result, DeficientSet):
        raise AnomalyError(
            "deficiency_split",
            "S'' has no K_{1,2}-matching into Q1 - N(S')",
            {"deficient": list(result.members), "neighbors": result.neighborhood_size},
        )
    matching = {x: tuple(result.leaves(x)) for x in remaining}
    logger.debug(
        "deficiency_split",
        s_prime=popcount(s_prime),
        s_double_prime=popcount(s_double_prime),
        d1_star=popcount(d1_star),
    )
    return DeficiencySplit(
        q1, s_prime, s_double_prime, s_star, d1_star, matching, max(deficiency, 0)
    )
