"""Exact hamiltonicity oracles used as ground truth."""

from .answers import Method, OracleAnswer, Verdict
from .cover import longest_path, min_path_cover_oracle
from .hamiltonian import hamiltonian_cycle_oracle, hamiltonian_path_oracle, reach_table
from .validate import validate_cycle, validate_path, validate_path_cover

__all__ = [
    "Method",
    "OracleAnswer",
    "Verdict",
    "longest_path",
    "min_path_cover_oracle",
    "hamiltonian_cycle_oracle",
    "hamiltonian_path_oracle",
    "reach_table",
    "validate_cycle",
    "validate_path",
    "validate_path_cover",
]
