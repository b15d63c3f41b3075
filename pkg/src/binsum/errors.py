"""Exception types shared across the package."""


class UsageError(ValueError):
    """A caller violated a documented precondition (maps to CLI exit code 2)."""


class ParseError(UsageError):
    """Malformed polynomial text; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.  Signals a bug, not bad input."""


class ResourceCapError(RuntimeError):
    """A computation would exceed a configured resource cap (CLI exit code 3)."""


class RecurrenceNotFound(RuntimeError):
    """No linear recurrence within the allowed order fits the given data."""
