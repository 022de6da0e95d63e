"""Exception types shared across the package."""

from __future__ import annotations


class GraphValidationError(ValueError):
    """Raised when a graph, edge, vertex set, or parameter is invalid."""


class ResourceCapError(RuntimeError):
    """Raised when an input exceeds an enforced size cap."""


class BudgetExhausted(ResourceCapError):
    """The branch-and-bound node budget ran out before optimality was proven.

    ``lower`` is the best proven lower bound and ``upper`` the size of the best
    dominating set known when the search stopped.
    """

    def __init__(self, message: str, lower: int, upper: int, nodes: int):
        super().__init__(f"{message} (bounds [{lower}, {upper}], {nodes} nodes)")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class ParseError(ValueError):
    """Malformed serialized input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
