"""Shared exception types."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph."""


class NotChordalError(ValueError):
    """Raised when an operation requires a chordal graph."""


class ClassMismatchError(ValueError):
    """Raised when a graph fails the class precondition of a decider."""


class GuardExceededError(RuntimeError):
    """Raised when an instance exceeds an explicit size guard.

    Guards are never relaxed silently: either the exact computation runs,
    or this error names the limit that was hit.
    """

    def __init__(self, what: str, size: int, guard: int):
        super().__init__(f"{what}: size {size} exceeds guard {guard}")
        self.size = size
        self.guard = guard
