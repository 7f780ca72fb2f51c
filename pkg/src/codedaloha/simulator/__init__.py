"""
Finite-frame simulation of coded slotted ALOHA.
"""
from .frame import FrameGraph, build_frame, peel
from .simulate import (SimPoint, simulate, write_points, load_grid,
                       load_count, slotted_aloha_throughput,
                       slot_degree_histogram, poisson_fit, PoissonFit,
                       SIM_COLUMNS)
from .config import SimConfig, load_simulation
from .exceptions import SimulationError, PlacementError

__all__ = ('FrameGraph', 'build_frame', 'peel', 'SimPoint', 'simulate',
           'write_points', 'load_grid', 'load_count',
           'slotted_aloha_throughput', 'slot_degree_histogram', 'poisson_fit',
           'PoissonFit', 'SIM_COLUMNS', 'SimConfig', 'load_simulation',
           'SimulationError', 'PlacementError')
