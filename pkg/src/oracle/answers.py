"""Oracle answer records."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Union

from ..graph import Cycle, Path


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"


class Method(str, Enum):
    DP = "dp"
    BACKTRACK = "backtracking"
    SUBSET_DP = "subset_dp"


@dataclass(frozen=True)
class OracleAnswer:
    """Exhaustive verdict with a witness on YES."""

    verdict: Verdict
    witness: Optional[Union[Cycle, Path]]
    nodes_explored: int
    method: Method

    @property
    def yes(self) -> bool:
        return self.verdict == Verdict.YES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else list(self.witness.verts),
            "nodes_explored": self.nodes_explored,
            "method": self.method.value,
        }
