"""
Differential evolution search over the selection p.m.f.
"""
import csv
import logging
import math
from collections import namedtuple

import numpy as np
from scipy.optimize import differential_evolution

from .cache import FitnessCache
from .projection import decode
from ..density_evolution import threshold, AnalysisError
from ..ensembles import stats
from ..ensembles.config import rounded_pmf
from ..utils.executor import executor_map
from ..utils.string import fmt_number
from .. import settings


class OptResult(namedtuple('OptResult', 'pmf threshold rate generations seed '
                                        'history labels report evaluations '
                                        'cache_hits')):
    """The outcome of an optimization.

    Attributes
    ----------
    pmf : Tuple[float]
        The best p.m.f. over the candidates.
    threshold : float
        The threshold of the best p.m.f., recomputed at the fine tolerance.
    rate : float
        The rate achieved by the best p.m.f.
    generations : int
        The number of generations run.
    seed : int
        The random seed of the search.
    history : List[Tuple[int, float, Tuple[float]]]
        The best threshold and p.m.f. found by each generation.
    labels : Tuple[str]
        The candidate labels.
    report : :obj:`~codedaloha.density_evolution.ThresholdReport`
        The threshold report of the best p.m.f.
    evaluations : int
        The number of thresholds computed during the search.
    cache_hits : int
        The number of fitness values taken from the cache.
    """

    def write_history(self, stream):
        """Write the best-per-generation curve as CSV to a text stream."""
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['generation', 'best_threshold'] +
                        ['P[{}]'.format(label) for label in self.labels])
        for generation, best, pmf in self.history:
            writer.writerow([generation, fmt_number(best)] +
                            [fmt_number(p) for p in pmf])


def verify(pmf, problem, tol=settings.threshold_tolerance, method='both'):
    """Re-score a p.m.f. over the candidates of a problem.

    Parameters
    ----------
    pmf : Sequence[float]
        The p.m.f. over the problem's candidates. Sums that are off by
        rounding are renormalized.
    problem : :obj:`OptProblem <codedaloha.optimizer.OptProblem>`
        The problem.
    tol : Optional[float]
        The bisection tolerance.
    method : Optional[str]
        The admissibility criterion.

    Returns
    -------
    report : :obj:`~codedaloha.density_evolution.ThresholdReport`
        The threshold and stability bound of the p.m.f.

    Examples
    --------
    >>> from codedaloha.codes import spc_code
    >>> from codedaloha.optimizer import OptProblem
    >>> problem = OptProblem(2, [spc_code(2)], rate=2 / 3)
    >>> round(verify([1.], problem).threshold, 4)
    0.3333
    """
    ensemble = problem.ensemble(rounded_pmf(list(pmf)))
    s = stats(ensemble)
    if abs(s.rate - problem.rate) > settings.rate_tolerance:
        logging.warning("The p.m.f. has the rate {} instead of {}".format(
            fmt_number(s.rate), fmt_number(problem.rate)))
    return threshold(s, tol=tol, method=method,
                     ensemble_id=ensemble.ensemble_id)


class SearchFitness(object):
    """The fitness of a p.m.f.: its threshold found with the fixed-point grid
    at the search tolerance.

    Instances only hold the problem, so they can be sent to worker processes.
    """

    def __init__(self, problem):
        self.problem = problem

    def __call__(self, pmf):
        try:
            report = threshold(stats(self.problem.ensemble(pmf)),
                               tol=settings.search_tolerance, method='grid')
        except AnalysisError as e:
            logging.debug("Scoring the p.m.f. {} failed: {}".format(pmf, e))
            return 0.
        return report.threshold


def optimize(problem, jobs=1, cache_dir=None):
    """Search the p.m.f. with the largest threshold at the problem's rate.

    Each search vector is mapped to the simplex with a softmax and projected
    onto the p.m.f.s with the target rate before its fitness is computed.
    Fitness values are cached by p.m.f., and the missing values of a
    generation are computed together in worker processes. The best p.m.f. is
    re-scored with the fine bisection tolerance.

    Parameters
    ----------
    problem : :obj:`OptProblem <codedaloha.optimizer.OptProblem>`
        The problem.
    jobs : Optional[int]
        The number of worker processes. The result, including the evaluation
        and cache hit counts, doesn't depend on the number of jobs.
    cache_dir : Optional[str]
        The directory of a persistent fitness cache.

    Returns
    -------
    result : :obj:`OptResult`
        The best p.m.f. and the search history.

    Examples
    --------
    >>> from codedaloha.codes import repetition_code
    >>> from codedaloha.optimizer import OptProblem
    >>> result = optimize(OptProblem(1, [repetition_code(2)], rate=1 / 2))
    >>> result.pmf, round(result.threshold, 4)
    ((1.0,), 0.5)
    """
    lengths = np.array(problem.lengths, dtype=float)
    dim = len(problem.candidates)

    if dim == 1:
        pmf = (1.,)
        report = verify(pmf, problem)
        return OptResult(pmf=pmf, threshold=report.threshold,
                         rate=report.rate, generations=0, seed=problem.seed,
                         history=[(0, report.threshold, pmf)],
                         labels=problem.labels, report=report, evaluations=0,
                         cache_hits=0)

    cache = FitnessCache(directory=cache_dir,
                         namespace=problem.fingerprint + ':' +
                         repr(settings.search_tolerance))
    score = SearchFitness(problem)

    def pmf_of(vector):
        return decode(vector, lengths, problem.target_mean)

    def fitness(vector):
        return -cache[pmf_of(vector)]

    history = []

    def record(xk, convergence=None):
        pmf = pmf_of(xk)
        best = cache[pmf]
        history.append((len(history) + 1, best, tuple(pmf)))
        logging.debug("Generation {}: best threshold {}".format(
            len(history), fmt_number(best)))
        return False

    bounds = [(-settings.logit_bound, settings.logit_bound)] * dim
    popsize = max(1, math.ceil(problem.population / dim))
    logging.debug("Optimizing {} with a population of {} for up to {} "
                  "generations".format(problem, popsize * dim,
                                       problem.generations))
    try:
        with executor_map(jobs=jobs, processes=True) as pmap:
            # Fill the cache for a whole generation from the main process,
            # then read each member's fitness from it.
            def population_map(func, vectors):
                vectors = list(vectors)
                cache.map_or_compute([pmf_of(v) for v in vectors], score,
                                     pmap=pmap)
                return list(map(func, vectors))

            result = differential_evolution(
                fitness, bounds, strategy='best1bin',
                maxiter=problem.generations, popsize=popsize,
                mutation=problem.weight, recombination=problem.crossover,
                tol=settings.de_relative_tol, seed=problem.seed,
                callback=record, polish=False, updating='deferred',
                workers=population_map)
    finally:
        cache.close()

    pmf = tuple(float(p) for p in decode(result.x, lengths,
                                         problem.target_mean))
    report = verify(pmf, problem)
    logging.debug("The search ran {} generations with {} cache hits".format(
        result.nit, cache.hits))
    return OptResult(pmf=pmf, threshold=report.threshold, rate=report.rate,
                     generations=int(result.nit), seed=problem.seed,
                     history=history, labels=problem.labels, report=report,
                     evaluations=cache.misses, cache_hits=cache.hits)
