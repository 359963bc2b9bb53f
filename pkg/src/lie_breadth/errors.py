"""Exception hierarchy.

Every error raised for bad user input derives from :class:`ValidationError`,
which the CLI maps to exit code 1.
"""


class LieBreadthError(Exception):
    """Base class for all package errors."""


class ValidationError(LieBreadthError, ValueError):
    """Input data violates a documented contract."""


class DimensionMismatch(ValidationError):
    pass


class NotNilpotent(ValidationError):
    """Raised when an operator or algebra was expected to be nilpotent."""


class NotNilpotentOperator(NotNilpotent):
    pass


class InvalidProfile(ValidationError):
    pass


class JacobiViolation(ValidationError):
    """A bracket table loaded in strict mode fails the Jacobi identity."""


class NotAnIdeal(ValidationError):
    pass


class EmptySampleSpace(ValidationError):
    pass


class EmptySequence(ValidationError):
    pass


class InvalidDimension(ValidationError):
    pass


class UnknownKey(ValidationError):
    pass


class MissingParam(ValidationError):
    pass


class ConstraintViolated(ValidationError):
    pass


class ParseError(ValidationError):
    """Malformed input file. ``path`` locates the offending field."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class IndexOutOfRange(ParseError):
    pass


class DuplicateBracket(ParseError):
    pass


class TheoremViolation(LieBreadthError):
    """A computed result contradicts a proved classification statement."""


class InvalidParam(ValidationError):
    """A parameter name is not recognised by the constructor it was passed to."""
