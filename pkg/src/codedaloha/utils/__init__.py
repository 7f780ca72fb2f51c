from .string import (str_to_dict, str_to_list, str_to_number, str_to_int,
                     fmt_number, nicejoin)
from .hashing import hash_items, quantize
from .executor import executor_map, resolve_jobs

__all__ = ('str_to_dict', 'str_to_list', 'str_to_number', 'str_to_int',
           'fmt_number', 'nicejoin', 'hash_items', 'quantize',
           'executor_map', 'resolve_jobs')
