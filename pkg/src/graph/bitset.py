"""Integer-backed vertex sets.

A VertexSet is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member. All graph routines take and return masks.
"""

from typing import Iterable, Iterator, List

VertexSet = int


def vset(*vertices: int) -> VertexSet:
    """Build a vertex set from vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_iterable(vertices: Iterable[int]) -> VertexSet:
    """Build a vertex set from any iterable of vertex ids."""
    return vset(*vertices)


def popcount(mask: VertexSet) -> int:
    """Count members."""
    return mask.bit_count()


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield members in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: VertexSet) -> List[int]:
    """Sorted member list."""
    return list(iter_bits(mask))


def lowest(mask: VertexSet) -> int:
    """Smallest member; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> VertexSet:
    """All vertices of an n-vertex graph."""
    return (1 << n) - 1


def lex_key(mask: VertexSet) -> tuple:
    """Sort key ordering sets by their sorted member tuples."""
    return tuple(iter_bits(mask))
