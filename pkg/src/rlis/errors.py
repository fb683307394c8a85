"""Exception types raised across the package."""


class RLISError(Exception):
    """Base class for all package errors."""


class ParseError(RLISError, ValueError):
    """Malformed graph or decomposition input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(RLISError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class NotChordalError(RLISError):
    """Raised when a chordal-only routine receives a non-chordal graph."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(
            "graph is not chordal (chordless cycle %s); use the treewidth solver"
            % self.cycle
        )


class DecompositionError(RLISError, ValueError):
    """A decomposition is invalid or does not fit the solver's requirements."""
