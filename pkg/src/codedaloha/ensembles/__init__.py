from .ensemble import (Ensemble, ExplicitEnsemble, RandomEnsemble, check_pmf,
                       fingerprint)
from .counts import (RandomCodeCounts, random_code_counts,
                     expected_info_funcs, expected_a2, sample_generator)
from .stats import EnsembleStats, stats, stats_random, burst_coefficients
from .config import load_config, read_config, ensemble_from_config
from .presets import (load_preset, preset_document, preset_names,
                      reference_values)
from .exceptions import (EnsembleError, ConfigError, InvalidPmf,
                         MixedDimension, UnsupportedSize)

__all__ = ('Ensemble', 'ExplicitEnsemble', 'RandomEnsemble', 'check_pmf',
           'fingerprint', 'RandomCodeCounts', 'random_code_counts',
           'expected_info_funcs', 'expected_a2', 'sample_generator',
           'EnsembleStats', 'stats', 'stats_random', 'burst_coefficients',
           'load_config', 'read_config', 'ensemble_from_config',
           'load_preset', 'preset_document', 'preset_names',
           'reference_values', 'EnsembleError', 'ConfigError', 'InvalidPmf',
           'MixedDimension', 'UnsupportedSize')
