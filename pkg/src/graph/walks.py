"""Paths and cycles as vertex sequences."""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..utils.errors import PreconditionError
from .bitset import VertexSet, vset
from .core import Graph


def _check_distinct(verts: Tuple[int, ...], kind: str) -> None:
    if len(set(verts)) != len(verts):
        raise PreconditionError(f"{kind}_repeats", f"{kind} {list(verts)} repeats a vertex")


@dataclass(frozen=True)
class Path:
    """Nonempty sequence of distinct vertices, consecutive ones adjacent in the host."""

    verts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "verts", tuple(self.verts))
        if not self.verts:
            raise PreconditionError("path_empty", "a path needs at least one vertex")
        _check_distinct(self.verts, "path")

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.verts)

    def __contains__(self, v: object) -> bool:
        return v in self.verts

    @property
    def start(self) -> int:
        return self.verts[0]

    @property
    def end(self) -> int:
        return self.verts[-1]

    @property
    def vertex_set(self) -> VertexSet:
        return vset(*self.verts)

    def reversed(self) -> "Path":
        return Path(self.verts[::-1])

    def successor(self, v: int) -> int:
        """v+ along the path; -1 at the end."""
        i = self.verts.index(v)
        return self.verts[i + 1] if i + 1 < len(self.verts) else -1

    def predecessor(self, v: int) -> int:
        """v- along the path; -1 at the start."""
        i = self.verts.index(v)
        return self.verts[i - 1] if i > 0 else -1

    def segment(self, x: int, y: int) -> Tuple[int, ...]:
        """x P y, read backwards when y precedes x."""
        i, j = self.verts.index(x), self.verts.index(y)
        if i <= j:
            return self.verts[i : j + 1]
        return self.verts[j : i + 1][::-1]

    def is_valid_in(self, g: Graph) -> bool:
        if any(not 0 <= v < g.n for v in self.verts):
            return False
        return all(g.has_edge(a, b) for a, b in zip(self.verts, self.verts[1:]))


@dataclass(frozen=True)
class Cycle:
    """Cyclic sequence of at least three distinct vertices."""

    verts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "verts", tuple(self.verts))
        if len(self.verts) < 3:
            raise PreconditionError("cycle_short", "a cycle needs at least three vertices")
        _check_distinct(self.verts, "cycle")

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.verts)

    def __contains__(self, v: object) -> bool:
        return v in self.verts

    @property
    def vertex_set(self) -> VertexSet:
        return vset(*self.verts)

    def edges(self) -> List[Tuple[int, int]]:
        vs = self.verts
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def successor(self, v: int) -> int:
        """v+ in the cycle's orientation."""
        i = self.verts.index(v)
        return self.verts[(i + 1) % len(self.verts)]

    def predecessor(self, v: int) -> int:
        """v- in the cycle's orientation."""
        i = self.verts.index(v)
        return self.verts[i - 1]

    def segment(self, x: int, y: int) -> Tuple[int, ...]:
        """x C y: vertices from x forward to y, both included."""
        i, j = self.verts.index(x), self.verts.index(y)
        if i <= j:
            return self.verts[i : j + 1]
        return self.verts[i:] + self.verts[: j + 1]

    def reverse_segment(self, x: int, y: int) -> Tuple[int, ...]:
        """x C- y: vertices from x backward to y, both included."""
        return self.segment(y, x)[::-1]

    def rotated(self, v: int) -> "Cycle":
        """Same orientation, starting at v."""
        i = self.verts.index(v)
        return Cycle(self.verts[i:] + self.verts[:i])

    def reversed(self) -> "Cycle":
        return Cycle(self.verts[::-1])

    def normalized(self) -> "Cycle":
        """Start at the smallest vertex, heading to its smaller cycle neighbour."""
        r = self.rotated(min(self.verts))
        if r.verts[-1] < r.verts[1]:
            r = Cycle((r.verts[0],) + r.verts[1:][::-1])
        return r

    def is_valid_in(self, g: Graph) -> bool:
        if any(not 0 <= v < g.n for v in self.verts):
            return False
        return all(g.has_edge(a, b) for a, b in self.edges())
