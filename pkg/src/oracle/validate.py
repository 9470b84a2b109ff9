"""Independent validators for cycles, paths and path covers."""

from typing import Iterable, Sequence, Union

from ..graph import Cycle, Graph, Path, full_mask


def _consecutive_edges(g: Graph, seq: list) -> bool:
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def _sequence(walk: Union[Cycle, Path, Sequence[int]]) -> list:
    return list(walk.verts) if isinstance(walk, (Cycle, Path)) else list(walk)


def validate_cycle(g: Graph, cycle: Union[Cycle, Sequence[int]], hamiltonian: bool = True) -> bool:
    """Check a cycle vertex by vertex, optionally that it spans ``g``."""
    seq = _sequence(cycle)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    if not _consecutive_edges(g, seq + seq[:1]):
        return False
    return not hamiltonian or len(seq) == g.n


def validate_path(g: Graph, path: Union[Path, Sequence[int]], hamiltonian: bool = True) -> bool:
    """Check a path vertex by vertex, optionally that it spans ``g``."""
    seq = _sequence(path)
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    if not _consecutive_edges(g, seq):
        return False
    return not hamiltonian or len(seq) == g.n


def validate_path_cover(g: Graph, paths: Iterable[Union[Path, Sequence[int]]]) -> bool:
    """Paths must be valid, pairwise disjoint and together cover every vertex."""
    covered = 0
    for path in getattr(paths, "paths", paths):
        seq = _sequence(path)
        if not validate_path(g, seq, hamiltonian=False):
            return False
        for v in seq:
            if covered >> v & 1:
                return False
            covered |= 1 << v
    return covered == full_mask(g.n)
