"""
Slot (sum-node) degree distributions.
"""
import numpy as np
from scipy import stats as sps


def sum_node_degree_pmf(G, k, mean_length, d_max):
    """The Poisson slot degree distribution Psi_0..Psi_{d_max} reached as the
    number of users grows at the logical load G.

    Parameters
    ----------
    G : float
        The logical offered load.
    k : int
        The dimension.
    mean_length : float
        The average code length n̄.
    d_max : int
        The largest degree listed.

    Returns
    -------
    pmf : :obj:`numpy.ndarray`
        The probabilities of the degrees 0..d_max.
    tail : float
        The probability of a degree above d_max.

    Examples
    --------
    >>> pmf, tail = sum_node_degree_pmf(0.5, 1, 2., 10)
    >>> round(float(pmf[0]), 6)
    0.367879
    >>> abs(float(pmf.sum()) + tail - 1.) < 1e-12
    True
    """
    mean = G * mean_length / k
    degrees = np.arange(d_max + 1)
    return sps.poisson.pmf(degrees, mean), float(sps.poisson.sf(d_max, mean))


def edge_degree_pmf(G, k, mean_length, d_max):
    """The edge-perspective slot degree distribution rho_0..rho_{d_max},
    rho_d = d Psi_d / (mean degree).

    For Poisson slot degrees, rho(x) = sum_d rho_d x^(d-1) equals Psi(x).

    Examples
    --------
    >>> rho = edge_degree_pmf(0.5, 1, 2., 40)
    >>> float(rho[0]), round(float(rho[1]), 6)
    (0.0, 0.367879)
    """
    mean = G * mean_length / k
    psi, _ = sum_node_degree_pmf(G, k, mean_length, d_max)
    return np.arange(d_max + 1) * psi / mean


def finite_sum_node_degree_pmf(M, N, mean_length, d_max):
    """The binomial slot degree distribution of a frame with M users and N
    slots, before the limit of many users.

    Each user occupies a given slot with probability n̄/N, independently of
    the other users.

    Examples
    --------
    >>> pmf, tail = finite_sum_node_degree_pmf(500, 1000, 2., 3)
    >>> round(float(pmf[0]), 6)
    0.367511
    """
    degrees = np.arange(d_max + 1)
    p = mean_length / N
    return sps.binom.pmf(degrees, M, p), float(sps.binom.sf(d_max, M, p))
