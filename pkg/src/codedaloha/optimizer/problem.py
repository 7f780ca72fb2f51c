"""
The definition of a distribution optimization problem.
"""
from ..codes import LinearCode, parse_generator
from ..ensembles import ExplicitEnsemble, RandomEnsemble, fingerprint
from ..ensembles.config import (read_config, get_int, get_number, at_line,
                                read_block)
from ..ensembles.exceptions import ConfigError
from ..utils.string import str_to_list, str_to_int
from .exceptions import OptimizerError
from .projection import check_rate
from .. import settings


class OptProblem(object):
    """The search for the selection p.m.f. with the largest threshold at a
    target rate.

    Parameters
    ----------
    k : int
        The dimension.
    candidates : Sequence[Union[:obj:`LinearCode`, int]]
        Explicit codes, or code lengths of the random-code ensemble.
    rate : float
        The target rate k/n̄.
    population : Optional[int]
        The population size of the differential evolution.
    generations : Optional[int]
        The largest number of generations.
    weight : Optional[float]
        The differential weight.
    crossover : Optional[float]
        The crossover probability.
    seed : Optional[int]
        The random seed of the search.
    name : Optional[str]
        A descriptive name.
    matrices : Optional[Dict[int, :obj:`LinearCode`]]
        Fixed generator matrices by length for random-code candidates, kept
        in the optimized ensemble.

    Raises
    ------
    OptimizerError
        Raised if the candidates or hyperparameters are invalid.
    InfeasibleRate
        Raised if no p.m.f. over the candidates reaches the target rate.

    Examples
    --------
    >>> problem = OptProblem(2, [3, 4], rate=3 / 5)
    >>> problem.mode, problem.target_mean
    ('random', 3.3333333333333335)
    """

    def __init__(self, k, candidates, rate,
                 population=settings.de_population,
                 generations=settings.de_generations,
                 weight=settings.de_weight, crossover=settings.de_crossover,
                 seed=settings.default_seed,
                 name=None, matrices=None):
        candidates = tuple(candidates)
        if not candidates:
            raise OptimizerError("the problem has no candidates")

        if all(isinstance(c, LinearCode) for c in candidates):
            self.mode = 'explicit'
            if any(c.k != k for c in candidates):
                msg = "the candidate codes don't all have the dimension k={}"
                raise OptimizerError(msg.format(k))
            self.lengths = tuple(c.n for c in candidates)
        elif all(isinstance(c, int) for c in candidates):
            self.mode = 'random'
            self.lengths = candidates
        else:
            raise OptimizerError("the candidates must all be codes or all be "
                                 "code lengths")

        for n in self.lengths:
            if k / n < settings.min_local_rate - settings.rate_tolerance:
                msg = ("the local rate {}/{} of a candidate is below the "
                       "smallest allowed local rate {:.6g}")
                raise OptimizerError(msg.format(k, n, settings.min_local_rate))

        if not 0. < rate < 1.:
            raise OptimizerError("the rate {} is not in (0, 1)".format(rate))
        if population < 1 or generations < 1:
            raise OptimizerError("the population and number of generations "
                                 "must be positive")
        if not 0. <= crossover <= 1.:
            raise OptimizerError("the crossover probability must be in [0, 1]")
        if not 0. < weight <= 2.:
            raise OptimizerError("the differential weight must be in (0, 2]")

        self.k = k
        self.candidates = candidates
        self.rate = rate
        self.population = population
        self.generations = generations
        self.weight = weight
        self.crossover = crossover
        self.seed = seed
        self.name = name
        self.matrices = dict(matrices or {})

        check_rate(self.lengths, self.target_mean)

    def __repr__(self):
        return "<OptProblem k={} R={:.6g} {} candidates>".format(
            self.k, self.rate, len(self.candidates))

    @property
    def target_mean(self):
        """The mean length k/R of the target rate."""
        return self.k / self.rate

    @property
    def labels(self):
        return tuple(c.generator_string if isinstance(c, LinearCode)
                     else str(c) for c in self.candidates)

    def ensemble(self, pmf, name=None):
        """The ensemble of the candidates with the given p.m.f."""
        name = name if name is not None else self.name
        if self.mode == 'explicit':
            return ExplicitEnsemble(self.candidates, pmf, name=name)
        return RandomEnsemble(self.k, self.candidates, pmf,
                              matrices=self.matrices, name=name)

    @property
    def fingerprint(self):
        """A digest of the candidates, used to separate cached fitness
        values."""
        uniform = [1. / len(self.candidates)] * len(self.candidates)
        return fingerprint(self.ensemble(uniform))

    @classmethod
    def from_ensemble(cls, ensemble, rate=None, **kwargs):
        """A problem over the candidates of an ensemble, at the ensemble's rate
        unless another is given."""
        if ensemble.mode == 'explicit':
            candidates = ensemble.codes
        else:
            candidates = ensemble.lengths
            kwargs.setdefault('matrices', ensemble.matrices)
        rate = rate if rate is not None else ensemble.rate
        kwargs.setdefault('name', ensemble.name)
        return cls(ensemble.k, candidates, rate, **kwargs)

    @classmethod
    def from_config(cls, source):
        """Load a problem from an optimization configuration.

        The configuration has the keys of an ensemble configuration, or a
        'candidates' list instead of the 'entries', and the keys 'rate',
        'population', 'generations', 'weight', 'crossover' and 'seed'.
        Candidates are separated by semicolons or new lines, or by commas for
        lengths and single-row generators.

        Examples
        --------
        >>> problem = OptProblem.from_config('''
        ... k: 1
        ... candidates: 11, 111, 111111
        ... rate: 1/3
        ... generations: 20
        ... ''')
        >>> problem.lengths, problem.generations
        ((2, 3, 6), 20)
        """
        config = read_config(source)
        k = get_int(config, 'k')
        mode = config.get('mode', 'explicit').strip().lower()

        if config.get('candidates', '').strip():
            lineno = config.linenos['candidates']
            items = str_to_list(config['candidates'])
        elif config.get('entries', '').strip():
            entries = read_block(config, 'entries')
            lineno = config.linenos['entries']
            items = list(entries.keys())
        else:
            raise ConfigError("the problem has no candidates")

        with at_line(lineno):
            if mode == 'random':
                candidates = [str_to_int(item) for item in items]
            else:
                candidates = [parse_generator(item) for item in items]

        matrices = dict()
        if config.get('matrices', '').strip():
            block = read_block(config, 'matrices')
            for key, value in block.items():
                with at_line(block.linenos[key]):
                    matrices[str_to_int(key)] = parse_generator(value)

        kwargs = dict(
            population=get_int(config, 'population', settings.de_population),
            generations=get_int(config, 'generations',
                                settings.de_generations),
            weight=get_number(config, 'weight', settings.de_weight),
            crossover=get_number(config, 'crossover', settings.de_crossover),
            seed=get_int(config, 'seed', settings.default_seed),
            name=config.get('name', '').strip() or None,
            matrices=matrices)
        rate = get_number(config, 'rate')

        with at_line(config.linenos.get('rate')):
            return cls(k, candidates, rate, **kwargs)
