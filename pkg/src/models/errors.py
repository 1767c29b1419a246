"""
Exceptions raised by the hypergraph toolkit.

Domain errors derive from ValueError so callers that only know about
built-in exceptions still catch them.
"""

from typing import Optional


class HypergraphError(ValueError):
    """Base class for invalid hypergraph input or parameters."""


class FormatError(HypergraphError):
    """Raised when a text file does not follow the expected format."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(HypergraphError):
    """Raised when a structure or parameter violates its invariants."""


class BudgetExceededError(RuntimeError):
    """
    Raised when an exhaustive search runs out of its node-expansion budget.

    Attributes:
        budget: The configured expansion limit
        expansions: Number of expansions performed before giving up
        what: Name of the search that ran out
    """

    def __init__(self, budget: int, expansions: int, what: str = "search"):
        self.budget = budget
        self.expansions = expansions
        self.what = what
        super().__init__(
            f"{what} exceeded its budget of {budget} node expansions "
            f"(explored {expansions})"
        )

    def __reduce__(self):
        # raised in search workers and re-raised in the parent
        return (type(self), (self.budget, self.expansions, self.what))
