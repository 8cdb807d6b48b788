"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition of an operation."""


class IntegrityError(RuntimeError):
    """An internal invariant failed.  Indicates a bug, never bad input."""
