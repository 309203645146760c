"""Shared exception types."""


class GuardExceeded(ValueError):
    """A computation was refused because it exceeds a desk-scale guard."""


class Graph6ParseError(ValueError):
    """Input is not a valid short-form graph6 string."""
