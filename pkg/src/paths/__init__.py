"""Path covers, cycle surgery and hamiltonicity constructions."""

from .chvatal_erdos import chvatal_erdos_construction, chvatal_erdos_cycle
from .cover import PathCover, chain_through_cutset, min_path_cover_p32p1free
from .hamiltonicity import (
    hamiltonian_connected_check,
    hamiltonian_path_check,
    is_hamiltonian_connected,
)
from .insertion import InsertionRung, insert_vertex, insert_vertex_into_path
from .splice import SpliceLog, SpliceStep, splice

__all__ = [
    "chvatal_erdos_construction",
    "chvatal_erdos_cycle",
    "PathCover",
    "chain_through_cutset",
    "min_path_cover_p32p1free",
    "hamiltonian_connected_check",
    "hamiltonian_path_check",
    "is_hamiltonian_connected",
    "InsertionRung",
    "insert_vertex",
    "insert_vertex_into_path",
    "SpliceLog",
    "SpliceStep",
    "splice",
]
