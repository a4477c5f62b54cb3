"""
    Exceptions raised by gridcycles.

    Every exception here derives from a built-in exception type, so callers
    that only know about ValueError or RuntimeError keep working.

"""


class InvalidOperationError(ValueError):
    """A symmetry operation that is not defined on the given grid."""


class InvalidStateError(ValueError):
    """A malformed connectivity state, or a state used in the wrong role."""


class MemoryBudgetExceeded(RuntimeError):
    """A frontier grew past the configured number of entries."""


class InconsistentCountsError(ValueError):
    """Symmetry counts that cannot come from a real population of cycles."""


class CrossCheckError(RuntimeError):
    """Two independent routes to the same count disagree."""


class InvariantViolation(AssertionError):
    """An internal invariant failed. This always signals a bug."""


class SizeLimitError(ValueError):
    """A brute-force request above the supported size."""


class CheckpointFormatError(ValueError):
    """A checkpoint file that cannot be loaded.

    `line_number` is the 1-based number of the first offending line.

    """

    def __init__(self, msg, line_number=None):
        if line_number is not None:
            msg = f"line {line_number}: {msg}"
        super().__init__(msg)
        self.line_number = line_number
