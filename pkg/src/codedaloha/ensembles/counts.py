"""
Exact counts for the random-code ensemble.

A (k x n) generator matrix qualifies when it has rank k, no all-zero column
and no column whose deletion reduces the rank. Qualifying matrices are
counted by classes of column multiplicities over the 2^k - 1 nonzero column
patterns. Each class is weighted by the number of its column orderings, and
the rank distribution of its column subsets is found by Möbius inversion
over the lattice of subspaces of GF(2)^k.
"""
import logging
from collections import namedtuple
from functools import lru_cache
from itertools import combinations, islice
from math import comb, factorial

import numpy as np

from .exceptions import EnsembleError, UnsupportedSize
from ..codes import LinearCode, InvalidGenerator
from ..codes.gf2 import rank, reduce_basis, transpose, weight
from .. import settings


class RandomCodeCounts(namedtuple('RandomCodeCounts',
                                  'k n J K a2_total d_min classes')):
    """The counts of the qualifying (k x n) generator matrices.

    Attributes
    ----------
    k, n : int
        The dimension and length.
    J : int
        The number of qualifying matrices.
    K : Tuple[Tuple[int]]
        K[g][u] is the number of qualifying matrices whose first g columns
        have rank u, for 0 <= g <= n and 0 <= u <= k.
    a2_total : int
        The number of weight-2 codewords summed over all qualifying matrices.
    d_min : int
        The smallest minimum distance of any qualifying matrix.
    classes : int
        The number of qualifying column-multiplicity classes.
    """

    @property
    def avg_a2(self):
        """The average number of weight-2 codewords, counted directly."""
        return self.a2_total / self.J

    def rank_sum(self, g):
        """The sum over u of u * K[g][u]."""
        return sum(u * count for u, count in enumerate(self.K[g]))


def gaussian_binomial(n, r, q=2):
    """The number of r-dimensional subspaces of an n-dimensional space over
    the field with q elements.

    Examples
    --------
    >>> gaussian_binomial(3, 1)
    7
    >>> gaussian_binomial(3, 2)
    7
    >>> gaussian_binomial(2, 0)
    1
    """
    if not 0 <= r <= n:
        return 0
    numerator = denominator = 1
    for i in range(r):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def _span(basis):
    vectors = {0}
    for b in basis:
        vectors |= {v ^ b for v in vectors}
    return frozenset(vectors)


@lru_cache(maxsize=None)
def _subspaces(k):
    """The dimensions and member indicators, over the nonzero patterns
    1..2^k-1, of every subspace of GF(2)^k."""
    patterns = range(1, 1 << k)
    spaces = dict()
    for size in range(k + 1):
        for generators in combinations(patterns, size):
            basis = reduce_basis(generators)
            if len(basis) == size:
                spaces.setdefault(_span(basis), size)

    dims = np.array(list(spaces.values()), dtype=np.int64)
    indicators = np.array([[v in members for v in patterns]
                           for members in spaces], dtype=np.int64)
    return dims, indicators.reshape(len(spaces), len(patterns))


@lru_cache(maxsize=None)
def _support_tables(k):
    """For every support (bitmask over the nonzero patterns), whether it
    spans GF(2)^k and the mask of patterns whose removal reduces the rank."""
    patterns = (1 << k) - 1
    full = np.zeros(1 << patterns, dtype=bool)
    critical = np.zeros(1 << patterns, dtype=np.int64)
    for support in range(1 << patterns):
        members = [v for v in range(1, patterns + 1)
                   if (support >> (v - 1)) & 1]
        if rank(members) != k:
            continue
        full[support] = True
        for v in members:
            if rank(u for u in members if u != v) < k:
                critical[support] |= 1 << (v - 1)
    return full, critical


def _mobius_coefficients(k):
    """coef[u][d] = sum over the u-dimensional superspaces W of a
    d-dimensional subspace W' of the lattice Möbius function mu(W', W)."""
    coef = [[0] * (k + 1) for _ in range(k + 1)]
    for u in range(k + 1):
        for d in range(u + 1):
            j = u - d
            coef[u][d] = ((-1) ** j * 2 ** (j * (j - 1) // 2) *
                          gaussian_binomial(k - d, j))
    return coef


def _multiplicity_classes(n, patterns):
    """Yield every vector of multiplicities over the patterns that sums to
    n."""
    slots = n + patterns - 1
    for bars in combinations(range(slots), patterns - 1):
        edges = (-1,) + bars + (slots,)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(patterns))


def check_random_size(k, n):
    """Raise an exception if the (k x n) random-code ensemble can't be
    counted exactly.

    Raises
    ------
    UnsupportedSize
        Raised if k, n or the number of column classes exceed the supported
        sizes.
    EnsembleError
        Raised if no matrix qualifies (n <= k).
    """
    if not 1 <= k <= settings.max_random_dimension:
        msg = ("random-code ensembles of dimension {} are not supported; "
               "the largest supported dimension is {}")
        raise UnsupportedSize(msg.format(k, settings.max_random_dimension))
    if n <= k:
        msg = "no ({},{}) generator matrix qualifies: the length must exceed k"
        raise EnsembleError(msg.format(n, k))
    if n > settings.max_code_length:
        msg = "the length {} exceeds the largest supported length {}"
        raise UnsupportedSize(msg.format(n, settings.max_code_length))

    patterns = (1 << k) - 1
    classes = comb(n + patterns - 1, patterns - 1)
    if classes > settings.enumeration_budget:
        msg = ("counting ({},{}) random codes needs {} column classes, more "
               "than the enumeration budget of {}")
        raise UnsupportedSize(msg.format(n, k, classes,
                                         settings.enumeration_budget))
    return classes


@lru_cache(maxsize=None)
def random_code_counts(k, n):
    """Count the qualifying (k x n) generator matrices and the ranks of their
    leading columns.

    Parameters
    ----------
    k : int
        The dimension.
    n : int
        The length.

    Returns
    -------
    counts : :obj:`RandomCodeCounts`
        The exact counts.

    Raises
    ------
    UnsupportedSize
        Raised if the ensemble is too large to enumerate.

    Examples
    --------
    >>> counts = random_code_counts(2, 3)
    >>> counts.J, counts.K[3]
    (6, (0, 0, 6))
    >>> random_code_counts(1, 4).J
    1
    """
    total_classes = check_random_size(k, n)
    patterns = (1 << k) - 1
    logging.debug("Counting ({},{}) random codes over {} column "
                  "classes".format(n, k, total_classes))

    dims, indicators = _subspaces(k)
    full, critical = _support_tables(k)
    coef = _mobius_coefficients(k)
    bits = 1 << np.arange(patterns, dtype=np.int64)
    parity = np.array([[weight(x & v) & 1 for v in range(1, patterns + 1)]
                       for x in range(1, patterns + 1)], dtype=np.int64)
    fact = np.array([factorial(i) for i in range(n + 1)], dtype=np.int64)
    binom = np.array([[comb(m, g) for g in range(n + 1)]
                      for m in range(n + 1)], dtype=np.int64)

    J = a2_total = classes = 0
    d_min = None
    # totals[d][g]: pairs of (matrix, g-subset of its columns) contained in a
    # d-dimensional subspace, summed over the d-dimensional subspaces
    totals = [[0] * (n + 1) for _ in range(k + 1)]

    iterator = _multiplicity_classes(n, patterns)
    while True:
        chunk = list(islice(iterator, settings.enumeration_chunk))
        if not chunk:
            break
        mult = np.array(chunk, dtype=np.int64).reshape(len(chunk), patterns)

        support = ((mult > 0) * bits).sum(axis=1)
        singles = ((mult == 1) * bits).sum(axis=1)
        keep = full[support] & ((critical[support] & singles) == 0)
        if not keep.any():
            continue
        mult = mult[keep]
        orderings = fact[n] // np.prod(fact[mult], axis=1)

        classes += len(mult)
        J += int(orderings.sum())

        inside = mult @ indicators.T
        weighted = np.einsum('c,csg->sg', orderings, binom[inside])
        for d in range(k + 1):
            row = weighted[dims == d].sum(axis=0)
            totals[d] = [t + int(x) for t, x in zip(totals[d], row)]

        # Hamming weights of the codewords of every nonzero message
        weights = mult @ parity.T
        a2_total += int((orderings * (weights == 2).sum(axis=1)).sum())
        chunk_min = int(weights.min())
        d_min = chunk_min if d_min is None else min(d_min, chunk_min)

    if J == 0:
        msg = "no ({},{}) generator matrix qualifies"
        raise EnsembleError(msg.format(n, k))

    K = tuple(tuple(sum(coef[u][d] * totals[d][g] for d in range(u + 1)) //
                    comb(n, g)
                    for u in range(k + 1))
              for g in range(n + 1))
    logging.debug("Found {} qualifying ({},{}) matrices in {} "
                  "classes".format(J, n, k, classes))
    return RandomCodeCounts(k=k, n=n, J=J, K=K, a2_total=a2_total,
                            d_min=d_min, classes=classes)


def expected_info_funcs(k, n):
    """The un-normalized information functions averaged over the qualifying
    (k x n) generator matrices.

    Examples
    --------
    >>> expected_info_funcs(2, 3)
    (0.0, 3.0, 6.0, 2.0)
    >>> expected_info_funcs(1, 3)
    (0.0, 3.0, 3.0, 1.0)
    """
    counts = random_code_counts(k, n)
    return tuple(comb(n, g) * counts.rank_sum(g) / counts.J
                 for g in range(n + 1))


def expected_a2(k, n):
    """The number of weight-2 codewords averaged over the qualifying
    (k x n) generator matrices.

    A pair of positions supports a weight-2 codeword exactly when the other
    n - 2 columns have rank k - 1.

    Examples
    --------
    >>> expected_a2(2, 3)
    3.0
    >>> round(expected_a2(2, 4), 9)
    1.333333333
    """
    counts = random_code_counts(k, n)
    return comb(n, 2) * (k - counts.rank_sum(n - 2) / counts.J)


def sample_generator(k, n, rng):
    """Draw a generator matrix uniformly from the qualifying (k x n)
    matrices.

    Columns are drawn uniformly from the nonzero patterns and the draw is
    rejected until the matrix qualifies.

    Parameters
    ----------
    k : int
        The dimension.
    n : int
        The length.
    rng : :obj:`numpy.random.Generator`
        The random number generator.

    Returns
    -------
    code : :obj:`LinearCode <codedaloha.codes.LinearCode>`
        The drawn code.

    Examples
    --------
    >>> code = sample_generator(2, 3, np.random.default_rng(1))
    >>> code.profile.info_funcs
    (0, 3, 6, 2)
    """
    for _ in range(settings.max_sample_draws):
        columns = [int(c) for c in rng.integers(1, 1 << k, size=n)]
        try:
            return LinearCode(transpose(columns, k), n=n)
        except InvalidGenerator:
            continue
    msg = "no qualifying ({},{}) generator matrix was drawn in {} draws"
    raise EnsembleError(msg.format(n, k, settings.max_sample_draws))
