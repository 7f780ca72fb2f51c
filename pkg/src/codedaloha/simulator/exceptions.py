"""
Exceptions for the frame simulator
"""
from ..exceptions import CsaException


class SimulationError(CsaException):
    """An error was encountered in setting up or running a simulation."""
    pass


class PlacementError(SimulationError):
    """The segments of a burst can't be placed in the frame."""
    pass
