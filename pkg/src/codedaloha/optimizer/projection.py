"""
Mapping of unconstrained search vectors onto the p.m.f.s that meet the rate
constraint.
"""
import numpy as np
from scipy.special import softmax

from .exceptions import InfeasibleRate
from .. import settings


def check_rate(lengths, target_mean):
    """Raise :exc:`InfeasibleRate` if no p.m.f. over the lengths has the
    target mean length."""
    lengths = np.asarray(lengths, dtype=float)
    slack = settings.rate_tolerance * target_mean
    if not lengths.min() - slack <= target_mean <= lengths.max() + slack:
        msg = ("the mean length {:.9g} is outside the range [{:g}, {:g}] of "
               "the candidate lengths")
        raise InfeasibleRate(msg.format(target_mean, lengths.min(),
                                        lengths.max()))


def _affine_projection(p, lengths, target_mean):
    """The Euclidean projection of p onto {x : sum x = 1, sum x n = target},
    with negative components clipped out until none remain."""
    x = np.zeros_like(p)
    active = np.ones(len(p), dtype=bool)
    for _ in range(len(p)):
        A = np.vstack([np.ones(active.sum()), lengths[active]])
        b = np.array([1., target_mean])
        y = p[active]
        y = y - A.T @ (np.linalg.pinv(A @ A.T) @ (A @ y - b))
        if (y >= 0.).all():
            x[active] = y
            return x
        active[np.flatnonzero(active)[y < 0.]] = False
        if not active.any():
            break
    return None


def project_to_rate(pmf, lengths, target_mean):
    """Project a p.m.f. onto the p.m.f.s with the target mean length.

    The p.m.f. is projected onto the hyperplane of the mean-length
    constraint, with negative components clipped and the projection
    repeated. The result is then mixed with the shortest or the longest
    candidate so that the mean length is met exactly.

    Parameters
    ----------
    pmf : Sequence[float]
        A p.m.f. (or non-negative weights) over the candidates.
    lengths : Sequence[int]
        The length of each candidate.
    target_mean : float
        The target mean length k/R.

    Returns
    -------
    projected : :obj:`numpy.ndarray`
        A p.m.f. with the target mean length.

    Raises
    ------
    InfeasibleRate
        Raised if the target mean length is outside the range of the
        lengths.

    Examples
    --------
    >>> p = project_to_rate([0.2, 0.3, 0.5], [2, 3, 6], 3.)
    >>> round(float(p @ [2, 3, 6]), 12), round(float(p.sum()), 12)
    (3.0, 1.0)
    >>> p = project_to_rate([0.5, 0.5], [2, 3], 2.)
    >>> [round(float(v), 12) for v in p]
    [1.0, 0.0]
    """
    lengths = np.asarray(lengths, dtype=float)
    check_rate(lengths, target_mean)

    p = np.clip(np.asarray(pmf, dtype=float), 0., None)
    p = p / p.sum() if p.sum() > 0. else np.full(len(p), 1. / len(p))

    projected = _affine_projection(p, lengths, target_mean)
    if projected is not None:
        p = projected

    # Exact correction by mixing with an extreme candidate
    mean = float(p @ lengths)
    if mean != target_mean:
        j = int(np.argmax(lengths) if target_mean > mean
                else np.argmin(lengths))
        if lengths[j] != mean:
            alpha = min(max((target_mean - mean) / (lengths[j] - mean), 0.),
                        1.)
            p = (1. - alpha) * p
            p[j] += alpha

    p = np.clip(p, 0., None)
    return p / p.sum()


def decode(vector, lengths, target_mean):
    """Map an unconstrained search vector to a p.m.f. with the target mean
    length: a softmax onto the simplex, then :func:`project_to_rate`.

    Examples
    --------
    >>> p = decode([0., 0., 0.], [2, 3, 6], 3.)
    >>> round(float(p @ [2, 3, 6]), 12)
    3.0
    """
    return project_to_rate(softmax(np.asarray(vector, dtype=float)), lengths,
                           target_mean)
