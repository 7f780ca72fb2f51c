"""
Analysis, optimization and simulation of Coded Slotted ALOHA.
"""
from .__version__ import __version__
from .exceptions import CsaException

__all__ = ('__version__', 'CsaException')
