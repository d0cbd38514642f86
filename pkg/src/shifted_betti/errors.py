"""Exception hierarchy.  The CLI maps each class to an exit code."""


class ShiftedBettiError(Exception):
    exit_code = 1


class ValidationError(ShiftedBettiError, ValueError):
    """Malformed input: wrong lengths, negative or unsorted entries."""

    exit_code = 2


class PreconditionError(ShiftedBettiError):
    """Input is well formed but an operation's hypothesis fails."""

    exit_code = 3


class DegenerateIdealError(PreconditionError):
    """Zero or unit ideal passed where a proper nonzero ideal is required."""


class NotShiftedError(PreconditionError):
    """Raised by shifted-only operations.  Carries the failing move."""

    def __init__(self, message: str, generator=None, moved=None):
        super().__init__(message)
        self.generator = generator
        self.moved = moved


class SizeGuardError(ShiftedBettiError):
    exit_code = 4
