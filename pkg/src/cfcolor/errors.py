"""Shared exception types."""


class InputFormatError(ValueError):
    """A file or argument does not conform to the expected format."""


class BudgetExceededError(RuntimeError):
    """A solver exhausted its explicit resource budget.

    Distinct from a "no" answer: the search was cut off, nothing is
    known about the instance.
    """

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes
