"""Degree conditions and cutset predicates used by the hamiltonicity lemmas."""

from fractions import Fraction
from typing import Any, Optional, Tuple

from ..graph import Graph, components, count_components, iter_bits
from ..graph import min_degree as _min_degree
from ..utils.errors import PreconditionError
from .rational import INFINITY, Rational, as_rational, ceil_rational
from .structure import connectivity


def min_degree(g: Graph) -> int:
    """delta(G)."""
    return _min_degree(g)


def exceeds_insertion_threshold(degree: int, n: int, t: Rational) -> bool:
    """degree > n/(t+1) - 1, i.e. (degree + 1)(t + 1) > n."""
    if t == INFINITY:
        return True
    return (degree + 1) * (Fraction(t) + 1) > n


def dirac_type_check(g: Graph, t: Any) -> bool:
    """
    Check delta(G) > n/(t+1) - 1 exactly.

    Args:
        g: Graph
        t: Positive toughness threshold

    Returns:
        True when the minimum degree clears the threshold
    """
    t = as_rational(t)
    if t <= 0:
        raise PreconditionError("positive_t", f"t must be positive, got {t}")
    return exceeds_insertion_threshold(_min_degree(g), g.n, t)


def degree_sum_check(g: Graph, t: Any) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """
    Check that every nonadjacent pair has degree sum > 2n/(t+1) - 2.

    Args:
        g: Graph
        t: Positive toughness threshold

    Returns:
        (True, None), or (False, the lexicographically first failing pair)
    """
    t = as_rational(t)
    if t <= 0:
        raise PreconditionError("positive_t", f"t must be positive, got {t}")
    if t == INFINITY:
        return True, None
    factor = Fraction(t) + 1
    degrees = [m.bit_count() for m in g.adj]
    for u in range(g.n):
        for v in iter_bits(g.vertices & ~g.adj[u] & ~((2 << u) - 1)):
            if (degrees[u] + degrees[v] + 2) * factor <= 2 * g.n:
                return False, (u, v)
    return True, None


def require_cutset(g: Graph, s: int, operation: str) -> None:
    """Raise unless G - S has at least two components."""
    if count_components(g, s) < 2:
        raise PreconditionError(
            "cutset", f"{operation} needs a cutset; G - S has fewer than two components"
        )


def is_proper_cutset(g: Graph, s: int) -> bool:
    """
    True when every vertex of the cutset S has neighbours in two or more components of G - S.

    Raises:
        PreconditionError: S is not a cutset
    """
    require_cutset(g, s, "is_proper_cutset")
    comps = components(g, s)
    for x in iter_bits(s):
        if sum(1 for c in comps if g.adj[x] & c) < 2:
            return False
    return True


def connectivity_toughness_bound(g: Graph, tau: Rational) -> bool:
    """kappa(G) >= ceil(2 tau) for noncomplete graphs; vacuous for complete ones."""
    if tau == INFINITY:
        return True
    kappa, _ = connectivity(g)
    return kappa >= ceil_rational(2 * Fraction(tau))
