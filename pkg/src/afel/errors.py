"""Exception hierarchy shared across the library.

Precondition violations are caller errors (CLI exit code 2).  Theory
violations signal that an identity guaranteed by the underlying mathematics
failed inside the library, i.e. a bug (CLI exit code 3); they are never an
expected outcome for valid inputs.
"""


class AfelError(Exception):
    pass


class PreconditionError(AfelError):
    """Input violates a documented precondition of an operation."""


class TheoryViolationError(AfelError):
    """An exact identity that must hold by theory failed to hold."""
