"""Exception hierarchy shared by every isolation module."""


class IsolationError(ValueError):
    """Base class for all errors raised by the isolation toolkit."""


class GraphParseError(IsolationError):
    """Malformed graph text. Carries the 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int = 0, offset: int = 0):
        self.line = line
        self.offset = offset
        super().__init__(f"line {line}, offset {offset}: {message}")


class GraphSizeError(IsolationError):
    """The requested graph does not fit the representation or the search limit."""


class StructureError(IsolationError):
    """The graph lacks a structural property the operation needs (connected, forest, bipartite)."""


class PreconditionError(IsolationError):
    """An operation was called outside the hypothesis of the theorem it implements."""


class ParameterError(IsolationError):
    """Invalid generator or CLI parameters."""


class ConstructionError(IsolationError):
    """A constructive algorithm failed its own self-check."""
