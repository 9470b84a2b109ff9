"""Branch tags and the JSON trace of a pipeline run."""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class BranchTag(str, Enum):
    DIRAC_SHORTCUT = "DIRAC_SHORTCUT"
    DEGREE_SUM_SHORTCUT = "DEGREE_SUM_SHORTCUT"
    DECOMPOSE = "DECOMPOSE"
    HEAVY_CLIQUE = "HEAVY_CLIQUE"
    DEFICIENCY_SPLIT = "DEFICIENCY_SPLIT"
    GAP_FLAG = "GAP_FLAG"
    SHORTCUT = "SHORTCUT"
    LEMMA_2_7_ASSEMBLY = "LEMMA_2_7_ASSEMBLY"
    CLAIM1_GLUE = "CLAIM1_GLUE"
    CHVATAL_ERDOS = "CHVATAL_ERDOS"
    ORACLE_FALLBACK = "ORACLE_FALLBACK"
    FAILURE = "FAILURE"


TERMINAL_TAGS = frozenset(
    {
        BranchTag.SHORTCUT,
        BranchTag.LEMMA_2_7_ASSEMBLY,
        BranchTag.CLAIM1_GLUE,
        BranchTag.CHVATAL_ERDOS,
        BranchTag.ORACLE_FALLBACK,
        BranchTag.FAILURE,
    }
)


class CycleTrace(BaseModel):
    """Outcome of one construction run, emitted as JSON."""

    schema_version: int = 1
    n: int
    t: str
    certificate: Dict[str, Any]
    cycle: Optional[List[int]] = None
    branch_log: List[str] = Field(default_factory=list)
    terminal: str
    validated: bool = False
    splice_log: Optional[Dict[str, Any]] = None
    decomposition: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def success(self) -> bool:
        return self.cycle is not None and self.validated
