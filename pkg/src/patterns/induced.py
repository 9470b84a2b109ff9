"""Generic induced-subgraph search."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..graph import Graph, iter_bits
from ..utils.errors import PreconditionError

MAX_PATTERN_SIZE = 8


@dataclass(frozen=True)
class PatternWitness:
    """Injective map pattern vertex i -> host vertex mapping[i]."""

    mapping: Tuple[int, ...]

    def realizes(self, g: Graph, pattern: Graph) -> bool:
        """True when the mapping preserves edges and non-edges exactly."""
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.has_edge(i, j) != g.has_edge(self.mapping[i], self.mapping[j]):
                    return False
        return True

    def to_list(self) -> List[int]:
        return list(self.mapping)


def find_induced(g: Graph, pattern: Graph) -> Optional[PatternWitness]:
    """
    Find the lexicographically least induced copy of ``pattern`` in ``g``.

    Pattern vertices are placed in index order; each placement filters the
    host candidates by adjacency (or non-adjacency) to every placed vertex.

    Args:
        g: Host graph
        pattern: Pattern graph with at most 8 vertices

    Returns:
        PatternWitness, or None when g is pattern-free

    Raises:
        PreconditionError: pattern too large
    """
    if pattern.n > MAX_PATTERN_SIZE:
        raise PreconditionError(
            "pattern_size", f"patterns are limited to {MAX_PATTERN_SIZE} vertices"
        )
    mapping: List[int] = []
    degree_ok = [
        sum(1 << h for h in range(g.n) if g.degree(h) >= pattern.degree(i))
        for i in range(pattern.n)
    ]

    def candidates(i: int) -> int:
        cand = degree_ok[i]
        for j, h in enumerate(mapping):
            cand &= ~(1 << h)
            cand &= g.adj[h] if pattern.has_edge(i, j) else ~g.adj[h]
        return cand

    def search(i: int) -> bool:
        if i == pattern.n:
            return True
        for h in iter_bits(candidates(i)):
            mapping.append(h)
            if search(i + 1):
                return True
            mapping.pop()
        return False

    return PatternWitness(tuple(mapping)) if search(0) else None
