"""
Exceptions for binary linear block codes.
"""
from ..exceptions import CsaException, ParseError


class CodeError(CsaException):
    """An error was encountered in building or using a linear block code."""
    pass


class InvalidGenerator(CodeError):
    """A generator matrix is rank-deficient, has an idle (all-zero) column,
    generates a code with minimum distance below 2 or exceeds the supported
    size."""
    pass


class MatrixParseError(CodeError, ParseError):
    """A generator matrix could not be parsed from its text notation."""
    pass
