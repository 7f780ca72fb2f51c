"""
Ensemble statistics: the averaged burst-node coefficients and the quantities
of the stability analysis, shared by both ensemble flavors.
"""
import numpy as np
from numpy.polynomial import polynomial as P

from .counts import (random_code_counts, expected_info_funcs,
                     expected_a2)
from .ensemble import RandomEnsemble
from ..codes import code_profile


def burst_coefficients(info_funcs):
    """The burst-node coefficients a_t = (n-t) e_{n-t} - (t+1) e_{n-1-t},
    for t = 0..n-1, of a code with information functions e_0..e_n.

    The extrinsic erasure probability of a burst-node position at input
    erasure probability x is (1/n) sum_t a_t x^t (1-x)^(n-1-t).

    Examples
    --------
    >>> burst_coefficients([0, 3, 6, 2]).tolist()
    [0.0, 6.0, 3.0]
    >>> burst_coefficients([0, 3, 3, 1]).tolist()
    [0.0, 0.0, 3.0]
    """
    e = np.asarray(info_funcs, dtype=float)
    n = len(e) - 1
    t = np.arange(n)
    return (n - t) * e[n - t] - (t + 1) * e[n - 1 - t]


class EnsembleStats(object):
    """The statistics of a code ensemble used by density evolution.

    Parameters
    ----------
    k : int
        The dimension.
    lengths : Sequence[int]
        The length n_h of each candidate.
    probs : Sequence[float]
        The selection probability P_h (or Q_n) of each candidate.
    a_coeffs : Sequence[Sequence[float]]
        The burst-node coefficients a_0..a_{n_h-1} of each candidate.
    avg_A2 : float
        The average number of weight-2 codewords. Zero when every candidate
        has a minimum distance of 3 or more.
    d_mins : Sequence[int]
        The minimum distance of each candidate.
    labels : Optional[Sequence[str]]
        The label of each candidate.

    Attributes
    ----------
    mean_length : float
        The average length n̄.
    rate : float
        The rate k / n̄.
    edge_probs : :obj:`numpy.ndarray`
        The edge-perspective probability λ_h = P_h n_h / n̄ of each
        candidate.
    """

    def __init__(self, k, lengths, probs, a_coeffs, avg_A2, d_mins,
                 labels=None):
        self.k = k
        self.lengths = tuple(int(n) for n in lengths)
        self.probs = np.asarray(probs, dtype=float)
        self.a_coeffs = tuple(np.asarray(a, dtype=float) for a in a_coeffs)
        self.avg_A2 = float(avg_A2)
        self.d_mins = tuple(int(d) for d in d_mins)
        self.labels = (tuple(labels) if labels is not None else
                       tuple(str(n) for n in self.lengths))

        self.mean_length = float(np.dot(self.probs, self.lengths))
        self.rate = k / self.mean_length
        self.edge_probs = (self.probs * np.array(self.lengths) /
                           self.mean_length)

        # Zero-padded (candidate, t) tables of the weights P_h a_t and the
        # exponents of x and (1-x)
        n_max = max(self.lengths)
        self._powers = np.tile(np.arange(n_max), (len(self.lengths), 1))
        self._rests = np.maximum(
            np.array(self.lengths)[:, np.newaxis] - 1 - self._powers, 0)
        self._weights = np.zeros(self._powers.shape)
        for h, (prob, a) in enumerate(zip(self.probs, self.a_coeffs)):
            self._weights[h, :len(a)] = prob * a

    def __repr__(self):
        return ("<EnsembleStats k={} n̄={:.6g} R={:.6g} Ā₂={:.6g}>"
                .format(self.k, self.mean_length, self.rate, self.avg_A2))

    @property
    def power_increment(self):
        """The average transmit power relative to slotted ALOHA, 1/R."""
        return 1. / self.rate

    @property
    def load_factor(self):
        """The ratio n̄/k of the physical to the logical load."""
        return self.mean_length / self.k

    @property
    def min_distance(self):
        """The smallest minimum distance of the candidates picked with a
        nonzero probability."""
        return min(d for d, p in zip(self.d_mins, self.probs) if p > 0.)

    def burst_sum(self, x):
        """The sum over candidates of P_h sum_t a_t x^t (1-x)^(n_h-1-t).

        This equals n̄ times the edge-averaged extrinsic erasure probability
        of the burst nodes at input erasure probability x.
        """
        xs = np.asarray(x, dtype=float)[..., np.newaxis, np.newaxis]
        terms = self._weights * xs ** self._powers * (1. - xs) ** self._rests
        total = terms.sum(axis=(-2, -1))
        return float(total) if total.ndim == 0 else total

    def extrinsic_erasure(self, x):
        """The extrinsic erasure probability of each candidate at input
        erasure probability x."""
        probs = []
        for n, a in zip(self.lengths, self.a_coeffs):
            t = np.arange(n)
            terms = x ** t * (1. - x) ** (n - 1 - t)
            probs.append(float(np.dot(a, terms)) / n)
        return probs

    @property
    def exit_power_coeffs(self):
        """The power-basis coefficients c_0..c_{n_max-1} of the burst sum,
        sum_j c_j x^j."""
        coeffs = np.zeros(max(self.lengths))
        for prob, n, a in zip(self.probs, self.lengths, self.a_coeffs):
            for t, a_t in enumerate(a):
                if prob == 0. or a_t == 0.:
                    continue
                term = P.polymul(P.polypow([0., 1.], t),
                                 P.polypow([1., -1.], n - 1 - t))
                coeffs[:len(term)] += prob * a_t * term
        return coeffs


def stats(ensemble):
    """The :class:`EnsembleStats` of an ensemble.

    Random-code ensembles are delegated to :func:`stats_random`.

    Examples
    --------
    >>> from codedaloha.codes import spc_code
    >>> from codedaloha.ensembles import ExplicitEnsemble
    >>> s = stats(ExplicitEnsemble([spc_code(2)], [1.]))
    >>> s.mean_length, s.avg_A2, s.a_coeffs[0].tolist()
    (3.0, 3.0, [0.0, 6.0, 3.0])
    """
    if isinstance(ensemble, RandomEnsemble):
        return stats_random(ensemble)

    profiles = [code_profile(code) for code in ensemble.codes]
    # Codes with a minimum distance of 3 or more have no weight-2 codewords
    avg_A2 = sum(p * profile.a2 for p, profile in zip(ensemble.pmf, profiles))
    return EnsembleStats(k=ensemble.k, lengths=ensemble.lengths,
                         probs=ensemble.pmf,
                         a_coeffs=[burst_coefficients(profile.info_funcs)
                                   for profile in profiles],
                         avg_A2=avg_A2,
                         d_mins=[profile.d_min for profile in profiles],
                         labels=ensemble.labels)


def stats_random(ensemble):
    """The :class:`EnsembleStats` of a random-code ensemble, averaged over
    the qualifying generator matrices of each length.

    Examples
    --------
    >>> from codedaloha.ensembles import RandomEnsemble
    >>> s = stats_random(RandomEnsemble(2, [3, 4], [2 / 3, 1 / 3]))
    >>> round(s.avg_A2, 9), round(s.k / (2 * s.avg_A2), 9)
    (2.444444444, 0.409090909)
    """
    k = ensemble.k
    a_coeffs, d_mins = [], []
    avg_A2 = 0.
    for n, prob in zip(ensemble.lengths, ensemble.pmf):
        a_coeffs.append(burst_coefficients(expected_info_funcs(k, n)))
        d_mins.append(random_code_counts(k, n).d_min)
        avg_A2 += prob * expected_a2(k, n)
    return EnsembleStats(k=k, lengths=ensemble.lengths, probs=ensemble.pmf,
                         a_coeffs=a_coeffs, avg_A2=avg_A2, d_mins=d_mins,
                         labels=ensemble.labels)
