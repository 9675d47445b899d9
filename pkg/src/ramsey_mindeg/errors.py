"""Exception hierarchy shared by every module."""


class RamseyError(Exception):
    """Base class for domain errors surfaced to callers and the CLI."""


class PreconditionError(RamseyError, ValueError):
    """An operation was called outside its stated hypotheses."""


class BudgetExceeded(RamseyError):
    """An exact/exhaustive search would exceed its configured budget."""


class Graph6Error(RamseyError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InvariantViolation(RamseyError, RuntimeError):
    """A step guaranteed by a proof failed. Signals a bug, never user error."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []
