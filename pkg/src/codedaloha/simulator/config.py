"""
Parsing of simulation configuration documents.

A simulation configuration is an ensemble configuration with the keys
'slots', 'trials', 'loads' and 'seed'::

    k: 2
    mode: random
    entries:
      4: 1
    slots: 1000
    trials: 100
    loads: 0.1:1.0:0.05
"""
from collections import namedtuple

from .simulate import load_grid
from ..ensembles.config import (read_config, ensemble_from_config, get_int,
                                at_line)
from .. import settings


SimConfig = namedtuple('SimConfig', 'ensemble slots trials loads seed')


def load_simulation(source, ensemble=None):
    """Load a simulation from a configuration file or text.

    Parameters
    ----------
    source : Union[str, :obj:`pathlib.Path`]
        The configuration file or text.
    ensemble : Optional[:obj:`Ensemble <codedaloha.ensembles.Ensemble>`]
        The ensemble to simulate. If None, the ensemble is read from the
        configuration.

    Returns
    -------
    config : :obj:`SimConfig`
        The ensemble and simulation settings. Missing settings take their
        default values.

    Examples
    --------
    >>> sim = load_simulation('''
    ... k: 1
    ... entries:
    ...   11: 1
    ... loads: 0.2, 0.4
    ... trials: 10
    ... ''')
    >>> sim.slots, sim.trials, sim.loads
    (1000, 10, [0.2, 0.4])
    """
    config = read_config(source)
    if ensemble is None:
        ensemble = ensemble_from_config(config)

    loads = [1.]
    if config.get('loads', '').strip():
        with at_line(config.linenos['loads']):
            loads = load_grid(config['loads'])

    return SimConfig(ensemble=ensemble,
                     slots=get_int(config, 'slots', settings.default_slots),
                     trials=get_int(config, 'trials', settings.default_trials),
                     loads=loads,
                     seed=get_int(config, 'seed', settings.default_seed))
