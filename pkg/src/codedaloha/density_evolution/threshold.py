"""
The threshold load of an ensemble: the largest logical load at which the
erasure probability of the recursion is driven to zero.
"""
import logging
from collections import namedtuple
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as P

from .evolution import (de_run, stability_bound, UNBOUNDED,
                        INDETERMINATE)
from .exceptions import (ThresholdDisagreement, NonMonotoneAdmissibility,
                         IndeterminateRun)
from .. import settings


#: The admissibility criteria of a load
METHODS = ('both', 'grid', 'de')


class ThresholdReport(namedtuple('ThresholdReport',
                                 'threshold stability_bound bisection_width '
                                 'tolerance method k rate ensemble_id '
                                 'indeterminate_runs')):
    """The threshold of an ensemble.

    Attributes
    ----------
    threshold : float
        The threshold load G*. Loads up to G* are admissible.
    stability_bound : Union[float, str]
        The stability bound, or 'unbounded'.
    bisection_width : float
        The width of the final bisection bracket. The threshold lies within
        [threshold, threshold + bisection_width].
    tolerance : float
        The requested bisection tolerance.
    method : str
        The admissibility criterion, 'both', 'grid' or 'de'.
    k : int
        The dimension.
    rate : float
        The rate of the ensemble.
    ensemble_id : Optional[str]
        The identifier of the ensemble.
    indeterminate_runs : int
        The number of density evolution runs that reached the iteration limit
        and deferred to the grid criterion.
    """

    def as_record(self):
        """The report as a flat dict for the output writers."""
        return {'ensemble_id': self.ensemble_id, 'k': self.k, 'R': self.rate,
                'G_star': self.threshold, 'G_star_sb': self.stability_bound,
                'tol': self.tolerance, 'bisection_width': self.bisection_width,
                'method': self.method,
                'indeterminate_runs': self.indeterminate_runs}


@lru_cache(maxsize=None)
def threshold_grid(points=settings.grid_points,
                   refinement=settings.grid_refinement):
    """The erasure probabilities on (0, 1] scanned for fixed points: uniform
    points and a geometric refinement near zero.

    Examples
    --------
    >>> grid = threshold_grid()
    >>> bool((grid > 0.).all()), float(grid.min()) < 1e-11, float(grid[-1])
    (True, True, 1.0)
    """
    start, stop, num = refinement
    uniform = np.linspace(0., 1., points + 1)[1:]
    geometric = np.logspace(start, stop, num)
    grid = np.unique(np.concatenate([geometric, uniform]))
    grid.flags.writeable = False
    return grid


def _relative_margin(stats, G, grid, sums):
    fx = -np.expm1(-(G / stats.k) * sums)
    margins = 1. - fx / grid
    i = int(np.argmin(margins))
    return float(margins[i]), float(grid[i])


def fixed_point_margin(stats, G):
    """The smallest relative gap (x - f(x, G)) / x over the fixed-point grid,
    and where it occurs.

    The load is admissible when the margin is positive: f(x, G) < x on the
    whole grid.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import spc_code
    >>> s = stats(ExplicitEnsemble([spc_code(2)], [1.]))
    >>> fixed_point_margin(s, 0.3)[0] > 0., fixed_point_margin(s, 0.4)[0] > 0.
    (True, False)
    """
    grid = threshold_grid()
    return _relative_margin(stats, G, grid, stats.burst_sum(grid))


def bifurcation_residual(stats, x, G):
    """The residuals (f(x,G) - x, df/dx(x,G) - 1) of the fixed-point and
    tangency conditions.

    Both vanish at the threshold for the erasure probability where the
    recursion's curve touches the diagonal.
    """
    s = stats.burst_sum(x)
    ds = P.polyval(x, P.polyder(stats.exit_power_coeffs))
    scale = G / stats.k
    fx = -np.expm1(-scale * s)
    dfx = scale * ds * np.exp(-scale * s)
    return float(fx - x), float(dfx - 1.)


class AdmissibilityCriterion(object):
    """Decides whether the erasure probability vanishes at a load.

    Parameters
    ----------
    stats : :obj:`EnsembleStats <codedaloha.ensembles.EnsembleStats>`
        The ensemble statistics.
    method : str
        'grid' uses the fixed-point grid, 'de' uses density evolution runs
        and 'both' uses the grid, cross-checked by density evolution.
    tol : float
        The bisection tolerance. Disagreements between the two criteria are
        tolerated when the grid verdict flips within this distance.
    """

    def __init__(self, stats, method='both', tol=settings.threshold_tolerance):
        if method not in METHODS:
            msg = "the method '{}' is not one of {}"
            raise ValueError(msg.format(method, ', '.join(METHODS)))
        self.stats = stats
        self.method = method
        self.tol = tol
        self.grid = threshold_grid()
        self.sums = stats.burst_sum(self.grid)
        self.indeterminate_runs = 0

    def grid_admissible(self, G):
        return _relative_margin(self.stats, G, self.grid, self.sums)[0] > 0.

    def __call__(self, G):
        if self.method == 'grid':
            return self.grid_admissible(G)

        run = de_run(self.stats, G)
        if self.method == 'de':
            if run.status == INDETERMINATE:
                msg = ("the density evolution at G={:.9g} neither converged "
                       "nor stalled in {} iterations")
                raise IndeterminateRun(msg.format(G, run.iterations), load=G)
            return run.converged_to_zero

        grid_ok = self.grid_admissible(G)
        if run.status == INDETERMINATE:
            self.indeterminate_runs += 1
            return grid_ok
        if run.converged_to_zero == grid_ok:
            return grid_ok

        # The verdicts may only differ within the tolerance of the threshold
        if run.converged_to_zero:
            consistent = self.grid_admissible(G - self.tol)
        else:
            consistent = not self.grid_admissible(G + self.tol)
        if not consistent:
            msg = ("at G={:.9g} density evolution {} but the fixed-point grid "
                   "finds the load {}")
            raise ThresholdDisagreement(msg.format(
                G, run.status, 'admissible' if grid_ok else 'inadmissible'))
        logging.debug("The criteria disagree within the tolerance at "
                      "G={:.9g}".format(G))
        return grid_ok


def threshold(stats, tol=settings.threshold_tolerance, method='both',
              ensemble_id=None):
    """Find the threshold load of an ensemble by bisection.

    Loads are first scanned on a coarse grid up to the stability bound (or
    the largest logical load) to bracket the threshold and to check that
    admissibility is monotone. The bracket is then bisected down to the
    tolerance.

    Parameters
    ----------
    stats : :obj:`EnsembleStats <codedaloha.ensembles.EnsembleStats>`
        The ensemble statistics.
    tol : Optional[float]
        The bisection tolerance.
    method : Optional[str]
        The admissibility criterion. See :class:`AdmissibilityCriterion`.
    ensemble_id : Optional[str]
        The identifier of the ensemble, for the report.

    Returns
    -------
    report : :obj:`ThresholdReport`
        The threshold and stability bound.

    Raises
    ------
    ValueError
        Raised if the tolerance isn't positive.
    NonMonotoneAdmissibility
        Raised if an admissible load lies above an inadmissible load.
    ThresholdDisagreement
        Raised if the grid and density evolution criteria disagree.
    IndeterminateRun
        Raised, for the 'de' method, if a run neither converges nor stalls.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import spc_code
    >>> report = threshold(stats(ExplicitEnsemble([spc_code(2)], [1.])))
    >>> round(report.threshold, 4)
    0.3333
    """
    if not tol > 0.:
        raise ValueError("the bisection tolerance must be positive")

    bound = stability_bound(stats)
    hi = settings.max_logical_load
    if bound != UNBOUNDED:
        hi = min(bound, hi)

    criterion = AdmissibilityCriterion(stats, method=method, tol=tol)
    loads = np.linspace(0., hi, settings.threshold_prescan + 1)[1:]
    verdicts = [criterion(float(G)) for G in loads]

    if all(verdicts):
        lo, width = float(hi), 0.
    else:
        first = verdicts.index(False)
        if any(verdicts[first:]):
            admissible = [float(G) for G, v in zip(loads[first:],
                                                   verdicts[first:]) if v]
            msg = ("the load {:.9g} is admissible above the inadmissible load "
                   "{:.9g}")
            raise NonMonotoneAdmissibility(msg.format(admissible[0],
                                                      loads[first]))

        lo = float(loads[first - 1]) if first > 0 else 0.
        up = float(loads[first])
        logging.debug("Bisecting the threshold in [{:.9g}, {:.9g}]"
                      .format(lo, up))
        while up - lo > tol:
            mid = 0.5 * (lo + up)
            if criterion(mid):
                lo = mid
            else:
                up = mid
        width = up - lo

    if criterion.indeterminate_runs:
        logging.debug("{} density evolution runs deferred to the grid "
                      "criterion".format(criterion.indeterminate_runs))

    return ThresholdReport(threshold=lo, stability_bound=bound,
                           bisection_width=width, tolerance=tol,
                           method=method, k=stats.k, rate=stats.rate,
                           ensemble_id=ensemble_id,
                           indeterminate_runs=criterion.indeterminate_runs)
