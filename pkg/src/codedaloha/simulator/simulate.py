"""
Monte Carlo throughput of finite frames.
"""
import logging
from collections import namedtuple

import numpy as np
from scipy import stats as sp_stats

from .frame import build_frame, peel
from .exceptions import SimulationError
from ..utils.executor import executor_map
from ..utils.output import write_records
from ..utils.string import str_to_number, fmt_number
from .. import settings


#: The columns of simulation output
SIM_COLUMNS = ('G_requested', 'G_actual', 'M', 'N', 'trials', 'S_mean',
               'S_stderr', 'PLR', 'avg_peel_iters')


class SimPoint(namedtuple('SimPoint', SIM_COLUMNS)):
    """The simulated throughput at one offered load.

    Attributes
    ----------
    G_requested : float
        The requested logical load.
    G_actual : float
        The load kM/N of the simulated frames.
    M : int
        The number of users per frame.
    N : int
        The number of slots per frame.
    trials : int
        The number of simulated frames.
    S_mean : float
        The normalized throughput, G_actual (1 - PLR).
    S_stderr : Optional[float]
        The standard error of the throughput, or None for a single trial.
    PLR : float
        The fraction of bursts that weren't decoded.
    avg_peel_iters : float
        The mean number of peeling rounds.
    """

    def as_record(self):
        return self._asdict()


def load_count(G, N, k):
    """The number of users M = round(G N / k) of a logical load.

    Examples
    --------
    >>> load_count(0.65, 1000, 2), load_count(0.0005, 1000, 1)
    (325, 1)
    """
    return int(np.floor(G * N / k + 0.5))


def load_grid(text):
    """Parse offered loads from a comma-separated list or a
    'start:stop:step' range, with the stop included.

    Raises
    ------
    SimulationError
        Raised if a range has a non-positive step or a load is negative.

    Examples
    --------
    >>> load_grid('0.1, 0.5')
    [0.1, 0.5]
    >>> load_grid('0:1:0.25')
    [0.0, 0.25, 0.5, 0.75, 1.0]
    """
    text = text.strip()
    if ':' in text:
        pieces = text.split(':')
        if len(pieces) != 3:
            msg = "the load range '{}' is not 'start:stop:step'"
            raise SimulationError(msg.format(text))
        start, stop, step = (str_to_number(p) for p in pieces)
        if not step > 0.:
            raise SimulationError("the load step must be positive")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        loads = [round(start + i * step, 12) for i in range(max(count, 0))]
    else:
        loads = [str_to_number(p) for p in text.split(',') if p.strip()]

    if not loads:
        raise SimulationError("no offered loads were listed")
    if any(G < 0. for G in loads):
        raise SimulationError("the offered loads must be non-negative")
    return loads


def trial_seed(base_seed, point, trial):
    """The seed of a frame's random number generator."""
    return [int(base_seed), int(point), int(trial)]


def _run_trial(task):
    ensemble, M, N, seed = task
    graph = build_frame(M, N, ensemble, seed)
    decoded, iterations = peel(graph)
    return len(decoded), iterations


def simulate(ensemble, N, loads, trials=settings.default_trials,
             base_seed=settings.default_seed, jobs=1):
    """Simulate the throughput of an ensemble over a grid of loads.

    Every frame draws from its own random stream, seeded by the base seed, the
    load point and the trial, so that the results don't depend on the number
    of jobs.

    Parameters
    ----------
    ensemble : :obj:`Ensemble <codedaloha.ensembles.Ensemble>`
        The code ensemble.
    N : int
        The number of slots per frame, a multiple of k.
    loads : Sequence[float]
        The logical offered loads G.
    trials : Optional[int]
        The number of frames per load.
    base_seed : Optional[int]
        The base random seed.
    jobs : Optional[int]
        The number of processes running frames.

    Returns
    -------
    points : List[:obj:`SimPoint`]
        The throughput at each load.

    Raises
    ------
    SimulationError
        Raised if the number of trials isn't positive, or if the frames can't
        be built.

    Examples
    --------
    >>> from codedaloha.ensembles import load_preset
    >>> point, = simulate(load_preset('csa-r1/2'), 100, [0.], trials=2)
    >>> point.M, point.S_mean, point.PLR
    (0, 0.0, 0.0)
    """
    if trials < 1:
        raise SimulationError("the number of trials must be at least 1")

    k = ensemble.k
    counts = [load_count(G, N, k) for G in loads]
    tasks = [(ensemble, M, N, trial_seed(base_seed, i, t))
             for i, M in enumerate(counts) for t in range(trials)]

    with executor_map(jobs=jobs, processes=True) as pmap:
        outcomes = list(pmap(_run_trial, tasks))

    points = []
    for i, (G, M) in enumerate(zip(loads, counts)):
        results = np.array(outcomes[i * trials:(i + 1) * trials], dtype=float)
        decoded, iterations = results[:, 0], results[:, 1]
        G_actual = k * M / N
        plr = 1. - decoded.sum() / (M * trials) if M > 0 else 0.
        stderr = None
        if trials > 1:
            stderr = float(np.std(k * decoded / N, ddof=1) / np.sqrt(trials))
        point = SimPoint(G_requested=float(G), G_actual=G_actual, M=M, N=N,
                         trials=trials, S_mean=G_actual * (1. - plr),
                         S_stderr=stderr, PLR=float(plr),
                         avg_peel_iters=float(iterations.mean()))
        logging.info("G={}: S={} PLR={} over {} frames".format(
            fmt_number(point.G_actual), fmt_number(point.S_mean),
            fmt_number(point.PLR), trials))
        points.append(point)
    return points


def write_points(points, stream, fmt='csv', summary=None):
    """Write simulation points as CSV or JSON."""
    write_records([p.as_record() for p in points], stream, fmt=fmt,
                  columns=list(SIM_COLUMNS), summary=summary)


def slotted_aloha_throughput(G):
    """The throughput G e^{-G} of slotted ALOHA.

    Examples
    --------
    >>> round(float(slotted_aloha_throughput(1.)), 6)
    0.367879
    """
    return G * np.exp(-np.asarray(G, dtype=float))


def slot_degree_histogram(graph):
    """The number of slots with each number of segments."""
    return np.bincount(graph.slot_degrees)


PoissonFit = namedtuple('PoissonFit', 'statistic pvalue bins')


def poisson_fit(graph, mean, min_expected=5.):
    """Chi-square goodness of fit of the slot degrees to a Poisson law.

    Degrees are binned from zero up, with the upper tail pooled in the last
    bin, so that every bin expects at least 'min_expected' slots.

    Parameters
    ----------
    graph : :obj:`FrameGraph <codedaloha.simulator.FrameGraph>`
        The frame.
    mean : float
        The mean slot degree (n̄/k) G of the Poisson law.
    min_expected : Optional[float]
        The smallest expected count of a bin.

    Returns
    -------
    fit : :obj:`PoissonFit`
        The chi-square statistic, its p-value and the number of bins.
    """
    hist = slot_degree_histogram(graph)
    N = graph.N
    law = sp_stats.poisson(mean)

    expected, observed = [], []
    degree = 0
    while law.sf(degree - 1) * N >= 2 * min_expected:
        e = law.pmf(degree) * N
        if e < min_expected:
            break
        expected.append(e)
        observed.append(hist[degree] if degree < len(hist) else 0)
        degree += 1
    tail_expected = law.sf(degree - 1) * N
    tail_observed = hist[degree:].sum() if degree < len(hist) else 0
    if tail_expected < min_expected and expected:
        expected[-1] += tail_expected
        observed[-1] += tail_observed
    else:
        expected.append(tail_expected)
        observed.append(tail_observed)

    if len(expected) < 2:
        raise SimulationError("the frame has too few slots for a "
                              "goodness of fit")
    statistic, pvalue = sp_stats.chisquare(observed, expected)
    return PoissonFit(float(statistic), float(pvalue), len(expected))
