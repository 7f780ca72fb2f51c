"""
The search for the selection p.m.f. with the largest threshold at a target
rate.
"""
from .problem import OptProblem
from .search import OptResult, SearchFitness, optimize, verify
from .projection import project_to_rate, decode, check_rate
from .cache import FitnessCache
from .exceptions import OptimizerError, InfeasibleRate

__all__ = ('OptProblem', 'OptResult', 'SearchFitness', 'optimize', 'verify',
           'project_to_rate', 'decode', 'check_rate', 'FitnessCache',
           'OptimizerError', 'InfeasibleRate')
