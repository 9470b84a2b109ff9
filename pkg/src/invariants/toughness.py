"""Exact toughness by pruned cutset enumeration."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Optional, Tuple

from ..config import get_settings
from ..graph import Graph, count_components, is_complete, members, vset
from ..utils.errors import SizeLimitError
from ..utils.helpers import format_rational
from .rational import INFINITY, Rational, as_rational
from .structure import independence_number


@dataclass(frozen=True)
class ToughnessCertificate:
    """Exact toughness with a tough set attaining it.

    ``tough_set`` is None for complete graphs and 0 (the empty set) for
    disconnected ones, where the value is 0 by convention.
    """

    value: Rational
    tough_set: Optional[int]
    components: int
    alpha: int

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": format_rational(self.value),
            "tough_set": None if self.tough_set is None else members(self.tough_set),
            "components": self.components,
            "alpha": self.alpha,
        }


def toughness(g: Graph, limit: Optional[int] = None) -> ToughnessCertificate:
    """
    Compute tau(G) exactly.

    Among cutsets of minimum ratio the certificate keeps the one with the
    most components, then the lexicographically least vertex tuple. Sizes
    are scanned upward and abandoned once |S| / min(n - |S|, alpha) exceeds
    the best ratio, since that bound grows with |S|.

    Args:
        g: Graph with n >= 1
        limit: Largest n accepted (defaults to the configured envelope)

    Returns:
        ToughnessCertificate

    Raises:
        SizeLimitError: n exceeds the limit
    """
    limit = get_settings().exact_toughness_max_n if limit is None else limit
    if g.n > limit:
        raise SizeLimitError("toughness", g.n, limit)
    alpha, _ = independence_number(g)
    if is_complete(g):
        return ToughnessCertificate(INFINITY, None, 1, alpha)
    w0 = count_components(g)
    if w0 > 1:
        return ToughnessCertificate(Fraction(0), 0, w0, alpha)

    best: Optional[Tuple[Fraction, int, Tuple[int, ...]]] = None
    for size in range(1, g.n - 1):
        if best is not None and Fraction(size, min(g.n - size, alpha)) > best[0]:
            break
        for combo in combinations(range(g.n), size):
            w = count_components(g, vset(*combo))
            if w < 2:
                continue
            key = (Fraction(size, w), -w, combo)
            if best is None or key < best:
                best = key
    assert best is not None, "noncomplete connected graph without a cutset"
    return ToughnessCertificate(best[0], vset(*best[2]), -best[1], alpha)


def is_t_tough(g: Graph, t: Any, limit: Optional[int] = None) -> Tuple[bool, Optional[int]]:
    """
    Decide t-toughness exactly.

    Args:
        g: Graph
        t: Threshold (Fraction, int, string or math.inf)
        limit: Size envelope passed to :func:`toughness`

    Returns:
        (True, None) or (False, a most-violating cutset)
    """
    t = as_rational(t)
    cert = toughness(g, limit)
    if cert.value >= t:
        return True, None
    return False, cert.tough_set
