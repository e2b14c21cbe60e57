"""Shared exception types."""


class CapacityError(RuntimeError):
    """An operation was refused because the input exceeds a stated size ceiling."""


class ScopeError(ValueError):
    """An input lies outside the family a closed-form test is proved for."""
