"""
The density evolution recursion of the erasure probability on the edges of
the frame graph.
"""
import logging
from collections import namedtuple

import numpy as np

from .. import settings


#: The verdicts of a density evolution run
CONVERGED = 'converged'
STALLED = 'stalled'
INDETERMINATE = 'indeterminate'

#: The stability bound of ensembles without weight-2 codewords
UNBOUNDED = 'unbounded'


def exit_function(stats, p):
    """The edge-averaged extrinsic erasure probability q of the burst nodes
    for an input erasure probability p.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import spc_code
    >>> s = stats(ExplicitEnsemble([spc_code(2)], [1.]))
    >>> round(exit_function(s, 0.5), 12)  # 2p - p^2
    0.75
    """
    return stats.burst_sum(p) / stats.mean_length


def sum_node_update(q, G, stats):
    """The erasure probability p = 1 - rho(1 - q) of the edges leaving the
    sum nodes, for the Poisson slot degrees at the logical load G."""
    p = -np.expm1(-G * stats.load_factor * q)
    return float(p) if np.ndim(p) == 0 else p


def de_step(stats, G, p):
    """One density evolution iteration, f(p, G).

    Parameters
    ----------
    stats : :obj:`EnsembleStats <codedaloha.ensembles.EnsembleStats>`
        The ensemble statistics.
    G : float
        The logical offered load.
    p : Union[float, :obj:`numpy.ndarray`]
        The erasure probability of the edges leaving the sum nodes.

    Returns
    -------
    p_next : Union[float, :obj:`numpy.ndarray`]
        The erasure probability after one iteration.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import repetition_code
    >>> s = stats(ExplicitEnsemble([repetition_code(2)], [1.]))
    >>> round(de_step(s, 0.5, 1.), 6)
    0.632121
    """
    p_next = -np.expm1(-(G / stats.k) * stats.burst_sum(p))
    return float(p_next) if np.ndim(p_next) == 0 else p_next


class DeResult(namedtuple('DeResult', 'trajectory status iterations')):
    """The trajectory p_0=1, p_1, ..., p_T of a density evolution run and its
    verdict: 'converged', 'stalled' or 'indeterminate'."""

    @property
    def converged_to_zero(self):
        return self.status == CONVERGED

    @property
    def final(self):
        return self.trajectory[-1]


def de_run(stats, G, tol=settings.de_tolerance, max_iter=settings.de_max_iter):
    """Iterate the density evolution recursion from p_0 = 1.

    The run has converged when the erasure probability falls below 'tol'. It
    has stalled at a nonzero fixed point when successive erasure
    probabilities differ by less than 'tol' times the stall factor, relative
    to the current erasure probability.

    Parameters
    ----------
    stats : :obj:`EnsembleStats <codedaloha.ensembles.EnsembleStats>`
        The ensemble statistics.
    G : float
        The logical offered load.
    tol : Optional[float]
        The convergence threshold.
    max_iter : Optional[int]
        The maximum number of iterations.

    Returns
    -------
    result : :obj:`DeResult`
        The trajectory and verdict. Runs that reach 'max_iter' are
        'indeterminate'.

    Raises
    ------
    ValueError
        Raised if the tolerance isn't positive or max_iter is less than 1.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import spc_code
    >>> s = stats(ExplicitEnsemble([spc_code(2)], [1.]))
    >>> de_run(s, 0.3).status, de_run(s, 0.4).status
    ('converged', 'stalled')
    """
    if not tol > 0.:
        raise ValueError("the convergence threshold must be positive")
    if max_iter < 1:
        raise ValueError("the maximum number of iterations must be at least 1")

    p = 1.
    trajectory = [p]
    status = INDETERMINATE
    for _ in range(max_iter):
        p_next = de_step(stats, G, p)
        trajectory.append(p_next)
        if p_next < tol:
            status = CONVERGED
            break
        if abs(p_next - p) < tol * settings.de_stall_factor * p_next:
            status = STALLED
            break
        p = p_next

    if status == INDETERMINATE:
        logging.debug("The density evolution at G={:.9g} is indeterminate "
                      "after {} iterations (p={:.3g})".format(G, max_iter,
                                                              trajectory[-1]))
    return DeResult(trajectory=tuple(trajectory), status=status,
                    iterations=len(trajectory) - 1)


def stability_bound(stats):
    """The largest load k/(2 Ā₂) at which the zero fixed point is locally
    stable, or 'unbounded' for ensembles without weight-2 codewords.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import repetition_code
    >>> stability_bound(stats(ExplicitEnsemble([repetition_code(2)], [1.])))
    0.5
    >>> stability_bound(stats(ExplicitEnsemble([repetition_code(3)], [1.])))
    'unbounded'
    """
    if stats.avg_A2 > 0.:
        return stats.k / (2. * stats.avg_A2)
    return UNBOUNDED


def stability_derivative(stats, G):
    """The slope f'(0, G) = (G/k) sum_h P_h a_1 of the recursion at zero.

    The zero fixed point is locally stable when the slope is below one.

    Examples
    --------
    >>> from codedaloha.ensembles import ExplicitEnsemble, stats
    >>> from codedaloha.codes import spc_code
    >>> stability_derivative(stats(ExplicitEnsemble([spc_code(2)], [1.])), 1.)
    3.0
    """
    slope = sum(p * a[1] for p, a in zip(stats.probs, stats.a_coeffs))
    return float(G / stats.k * slope)
