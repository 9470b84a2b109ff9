"""Exception hierarchy shared by every toolkit module."""

from typing import Any, Optional


class ToughHamError(Exception):
    """Base class for all toolkit errors."""


class PreconditionError(ToughHamError):
    """An operation was called on input that violates its stated precondition."""

    def __init__(self, condition: str, message: str, witness: Optional[Any] = None):
        super().__init__(f"{condition}: {message}")
        self.condition = condition
        self.witness = witness


class HypothesisError(PreconditionError):
    """A lemma or theorem hypothesis (freeness, toughness, size) does not hold."""


class SizeLimitError(ToughHamError):
    """An exact search was asked to run beyond its configured envelope."""

    def __init__(self, operation: str, n: int, limit: int):
        super().__init__(f"{operation}: n={n} exceeds the exact-search limit {limit}")
        self.operation = operation
        self.n = n
        self.limit = limit


class SpliceError(ToughHamError):
    """A segment replacement was malformed."""


class EndpointMismatchError(SpliceError):
    """The replacement segment does not share endpoints with the replaced one."""


class InteriorCollisionError(SpliceError):
    """The replacement interior reuses a vertex that stays on the host."""


class ConstructionError(ToughHamError):
    """A constructive ladder ran out of options."""

    def __init__(self, step: str, message: str, details: Optional[dict] = None):
        super().__init__(f"{step}: {message}")
        self.step = step
        self.details = details or {}


class AnomalyError(ToughHamError):
    """A construction reached a state its correctness argument rules out."""

    def __init__(self, step: str, message: str, details: Optional[dict] = None):
        super().__init__(f"{step}: {message}")
        self.step = step
        self.details = details or {}


class GraphFormatError(ToughHamError):
    """Malformed graph input."""

    def __init__(self, message: str, line: int = 1, position: Optional[int] = None):
        where = f"line {line}" if position is None else f"line {line}, byte {position}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.position = position
