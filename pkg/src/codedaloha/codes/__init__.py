from .linear_code import (LinearCode, CodeProfile, code_profile,
                          info_functions, weight_enumerator, min_distance,
                          erasure_map_decode, parse_generator,
                          repetition_code, spc_code)
from .gf2 import rank, column_span_rank
from .exceptions import CodeError, InvalidGenerator, MatrixParseError

__all__ = ('LinearCode', 'CodeProfile', 'code_profile', 'info_functions',
           'weight_enumerator', 'min_distance', 'erasure_map_decode',
           'parse_generator', 'repetition_code', 'spc_code', 'rank',
           'column_span_rank', 'CodeError', 'InvalidGenerator',
           'MatrixParseError')
