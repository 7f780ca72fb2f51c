"""
Exceptions for code ensembles
"""
from ..exceptions import CsaException, ParseError


class EnsembleError(CsaException):
    """An error was encountered in creating or analyzing a code ensemble."""
    pass


class ConfigError(EnsembleError, ParseError):
    """An ensemble configuration document is malformed or invalid."""
    pass


class InvalidPmf(EnsembleError):
    """A selection p.m.f. has negative entries, doesn't sum to one or doesn't
    match its candidates."""
    pass


class MixedDimension(EnsembleError):
    """The codes of an ensemble don't share the same dimension k."""
    pass


class UnsupportedSize(EnsembleError):
    """A random-code ensemble is too large to enumerate exactly."""
    pass
