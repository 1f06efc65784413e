"""Exception types shared across the package."""


class DflagError(Exception):
    """Base class for all package errors."""


class ParseError(DflagError):
    """Malformed textual input (compositions, pair tokens, CLI flags)."""


class BudgetExceededError(DflagError):
    """An enumeration would exceed the configured point budget.

    Carries the closed-form size so callers can report it without
    enumerating.
    """

    def __init__(self, message: str, size: int, budget: int):
        super().__init__(message)
        self.size = size
        self.budget = budget


class CrossCheckError(DflagError):
    """A proven verdict contradicts an oracle count.

    This is always either a bug or a documented caveat; it is never
    silently swallowed.
    """


class UnsupportedPairError(DflagError):
    """The requested operation is not available for this symmetric pair."""
