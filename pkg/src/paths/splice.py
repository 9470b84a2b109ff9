"""Segment replacement on cycles and paths, with a replayable log."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..graph import Cycle, Path, vset
from ..utils.errors import EndpointMismatchError, InteriorCollisionError, SpliceError

Walk = Union[Cycle, Path]


def _locate_forward(host: Walk, seg: Tuple[int, ...]) -> Optional[int]:
    """Index where ``seg`` starts as a forward run of ``host``, or None."""
    verts = host.verts
    if seg[0] not in verts:
        return None
    i = verts.index(seg[0])
    n = len(verts)
    if isinstance(host, Cycle):
        if len(seg) > n:
            return None
        run = tuple(verts[(i + k) % n] for k in range(len(seg)))
    else:
        run = verts[i : i + len(seg)]
    return i if run == seg else None


def splice(host: Walk, old: Union[Path, Sequence[int]], new: Union[Path, Sequence[int]]) -> Walk:
    """
    Replace the contiguous segment ``old`` of ``host`` by ``new``.

    ``old`` may run along the host in either direction. ``new`` must share
    its ends with ``old``; its interior may reuse the interior of ``old``
    but no other host vertex.

    Returns:
        A new Cycle or Path of the same kind as ``host``

    Raises:
        EndpointMismatchError: ``new`` has other ends than ``old``
        InteriorCollisionError: ``new`` runs through a vertex kept on the host
        SpliceError: ``old`` is not a segment of ``host``
    """
    old_seq = tuple(old.verts if isinstance(old, Path) else old)
    new_seq = tuple(new.verts if isinstance(new, Path) else new)
    if len(old_seq) < 2 or len(new_seq) < 2:
        raise SpliceError("segments need at least two vertices")
    if (old_seq[0], old_seq[-1]) != (new_seq[0], new_seq[-1]):
        raise EndpointMismatchError(
            f"segment ends {old_seq[0]}..{old_seq[-1]} differ from {new_seq[0]}..{new_seq[-1]}"
        )
    if len(set(new_seq)) != len(new_seq):
        raise InteriorCollisionError(f"replacement {list(new_seq)} repeats a vertex")

    at = _locate_forward(host, old_seq)
    if at is None:
        at = _locate_forward(host, old_seq[::-1])
        if at is None:
            raise SpliceError(f"{list(old_seq)} is not a segment of the host")
        old_seq, new_seq = old_seq[::-1], new_seq[::-1]

    kept = vset(*host.verts) & ~vset(*old_seq)
    clash = vset(*new_seq[1:-1]) & kept
    if clash:
        raise InteriorCollisionError(f"replacement interior meets host vertices {clash:b}")

    verts = host.verts
    if isinstance(host, Cycle):
        n = len(verts)
        rest = tuple(verts[(at + k) % n] for k in range(len(old_seq), n))
        return Cycle(new_seq + rest)
    return Path(verts[:at] + new_seq + verts[at + len(old_seq) :])


@dataclass(frozen=True)
class SpliceStep:
    """One surgery step; an empty ``old`` replaces the whole object."""

    old: Tuple[int, ...]
    new: Tuple[int, ...]
    tag: str

    def to_dict(self) -> Dict[str, Any]:
        return {"old": list(self.old), "new": list(self.new), "tag": self.tag}


@dataclass
class SpliceLog:
    """Initial object plus the ordered steps applied to it."""

    initial: Walk
    steps: List[SpliceStep] = field(default_factory=list)
    current: Optional[Walk] = None

    def __post_init__(self) -> None:
        if self.current is None:
            self.current = self.initial

    def apply(self, old: Sequence[int], new: Sequence[int], tag: str) -> Walk:
        """Splice the current object and record the step."""
        result = splice(self.current, old, new)
        self.steps.append(SpliceStep(tuple(old), tuple(new), tag))
        self.current = result
        return result

    def replace(self, walk: Walk, tag: str) -> Walk:
        """Record a wholesale replacement, used when a search rebuilds the object."""
        self.steps.append(SpliceStep((), tuple(walk.verts), tag))
        self.current = walk
        return walk

    def replay(self) -> Walk:
        """Re-run every step from the initial object."""
        walk = self.initial
        kind = type(self.initial)
        for step in self.steps:
            walk = kind(step.new) if not step.old else splice(walk, step.old, step.new)
        return walk

    @property
    def tags(self) -> List[str]:
        return [step.tag for step in self.steps]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "cycle" if isinstance(self.initial, Cycle) else "path",
            "initial": list(self.initial.verts),
            "steps": [step.to_dict() for step in self.steps],
        }
