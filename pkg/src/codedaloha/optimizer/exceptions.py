"""
Exceptions for the distribution optimizer
"""
from ..exceptions import CsaException


class OptimizerError(CsaException):
    """An error was encountered in setting up or running an optimization."""
    pass


class InfeasibleRate(OptimizerError):
    """The target rate can't be reached by any distribution over the
    candidates."""
    pass
