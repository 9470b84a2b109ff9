"""Hamiltonian path and hamiltonian-connectivity checks backed by the exact oracle."""

from itertools import combinations
from typing import Optional, Tuple

from ..graph import Graph, Path
from ..oracle import hamiltonian_path_oracle
from ..utils.errors import PreconditionError


def hamiltonian_path_check(g: Graph) -> Optional[Path]:
    """Lexicographically least hamiltonian path, or None."""
    if g.n < 3:
        raise PreconditionError("path_order", "hamiltonian path checks need n >= 3")
    answer = hamiltonian_path_oracle(g)
    return answer.witness if answer.yes else None


def hamiltonian_connected_check(g: Graph, u: int, v: int) -> Optional[Path]:
    """Hamiltonian u-v path, or None."""
    if g.n < 3:
        raise PreconditionError("path_order", "hamiltonian path checks need n >= 3")
    if u == v:
        raise PreconditionError("distinct_ends", "u and v must differ")
    answer = hamiltonian_path_oracle(g, u, v)
    return answer.witness if answer.yes else None


def is_hamiltonian_connected(g: Graph) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """
    Check every pair of vertices for a hamiltonian path between them.

    Returns:
        (True, None) or (False, first pair without such a path)
    """
    for u, v in combinations(range(g.n), 2):
        if hamiltonian_connected_check(g, u, v) is None:
            return False, (u, v)
    return True, None
