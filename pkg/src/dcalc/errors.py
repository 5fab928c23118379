"""Exception types shared across the package."""


class DcalcError(Exception):
    """Base class for every error raised on purpose by dcalc."""


class StructuralError(DcalcError, ValueError):
    """The parent edges do not describe a rooted tree."""


class PreconditionError(DcalcError, ValueError):
    """An operation was called with arguments outside its domain."""


class SearchBudgetExceeded(PreconditionError):
    """An exhaustive search was refused because the input is too large."""


class InvariantViolation(DcalcError, AssertionError):
    """A computed result broke an identity that must always hold."""


class InputError(DcalcError, ValueError):
    """A document could not be read or does not have the expected shape."""
