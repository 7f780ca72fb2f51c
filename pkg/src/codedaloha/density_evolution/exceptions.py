"""
Exceptions for the asymptotic analysis
"""
from ..exceptions import CsaException


class AnalysisError(CsaException):
    """An error was encountered in the density evolution analysis."""
    pass


class ThresholdDisagreement(AnalysisError):
    """The fixed-point grid criterion and the density evolution run disagree
    by more than the bisection tolerance."""
    pass


class NonMonotoneAdmissibility(AnalysisError):
    """An admissible load was found above an inadmissible load."""
    pass


class IndeterminateRun(AnalysisError):
    """A density evolution run reached the iteration limit without converging
    to zero or stalling."""

    load = None

    def __init__(self, msg, load=None):
        self.load = load
        super().__init__(msg)
