"""
Code ensembles: the set of local codes users pick from, and the p.m.f. they
pick with.
"""
import numpy as np
from slugify import slugify

from .counts import sample_generator, check_random_size
from .exceptions import EnsembleError, InvalidPmf, MixedDimension
from ..codes import LinearCode
from ..utils.hashing import hash_items
from .. import settings


def check_pmf(pmf, size=None):
    """Validate a probability mass function.

    Parameters
    ----------
    pmf : Sequence[float]
        The probabilities.
    size : Optional[int]
        The expected number of probabilities.

    Returns
    -------
    pmf : Tuple[float]
        The probabilities as floats.

    Raises
    ------
    InvalidPmf
        Raised if the p.m.f. is empty, has negative entries, doesn't sum to
        one or doesn't have the expected size.

    Examples
    --------
    >>> check_pmf([2 / 3, 1 / 3])
    (0.6666666666666666, 0.3333333333333333)
    >>> check_pmf([0.5, 0.6])
    Traceback (most recent call last):
    ...
    codedaloha.ensembles.exceptions.InvalidPmf: the p.m.f. sums to 1.1, not 1
    """
    pmf = tuple(float(p) for p in pmf)
    if not pmf:
        raise InvalidPmf("the p.m.f. is empty")
    if size is not None and len(pmf) != size:
        msg = "the p.m.f. has {} entries for {} candidates"
        raise InvalidPmf(msg.format(len(pmf), size))
    if any(not p >= 0. for p in pmf):
        msg = "the p.m.f. has negative entries: {}"
        raise InvalidPmf(msg.format(pmf))
    total = sum(pmf)
    if abs(total - 1.) > settings.pmf_tolerance:
        raise InvalidPmf("the p.m.f. sums to {:.12g}, not 1".format(total))
    return pmf


class Ensemble(object):
    """The base class for code ensembles.

    Attributes
    ----------
    k : int
        The number of information segments per burst, shared by all users.
    pmf : Tuple[float]
        The selection probability of each candidate.
    name : Optional[str]
        A descriptive name.
    """

    #: The ensemble flavor, 'explicit' or 'random'
    mode = None

    k = None
    pmf = None
    name = None

    def __init__(self, k, pmf, name=None):
        self.k = k
        self.pmf = check_pmf(pmf, size=len(self.lengths))
        self.name = name

    def __repr__(self):
        entries = ', '.join('{}: {:.6g}'.format(label, p)
                            for label, p in self.entries)
        return "<{} k={} {{{}}}>".format(self.__class__.__name__, self.k,
                                         entries)

    @property
    def lengths(self):
        """The length of each candidate."""
        raise NotImplementedError

    @property
    def labels(self):
        """The text label of each candidate."""
        raise NotImplementedError

    @property
    def entries(self):
        """The (label, probability) pair of each candidate."""
        return list(zip(self.labels, self.pmf))

    @property
    def mean_length(self):
        return float(np.dot(self.pmf, self.lengths))

    @property
    def rate(self):
        return self.k / self.mean_length

    @property
    def ensemble_id(self):
        """A short identifier: the slugified name, or the fingerprint."""
        if self.name:
            return slugify(self.name)
        return 'ensemble-' + fingerprint(self)[:10]

    def with_pmf(self, pmf, name=None):
        """A copy of this ensemble with a new p.m.f. over the same
        candidates."""
        raise NotImplementedError

    def draw_types(self, rng, size):
        """Draw the candidate index of each of 'size' users."""
        return rng.choice(len(self.pmf), size=size, p=self.pmf)

    def code_for(self, index, rng):
        """The code a user transmits with after picking a candidate."""
        raise NotImplementedError


class ExplicitEnsemble(Ensemble):
    """An ensemble of explicit codes picked with the p.m.f. P.

    Parameters
    ----------
    codes : Sequence[:obj:`LinearCode <codedaloha.codes.LinearCode>`]
        The candidate codes, all of the same dimension k. Their lengths
        need not be distinct.
    pmf : Sequence[float]
        The probability of each code.
    name : Optional[str]
        A descriptive name.

    Raises
    ------
    MixedDimension
        Raised if the codes don't share the same dimension.
    InvalidPmf
        Raised if the p.m.f. is invalid.

    Examples
    --------
    >>> from codedaloha.codes import repetition_code
    >>> ens = ExplicitEnsemble([repetition_code(2), repetition_code(3)],
    ...                        [0.5, 0.5])
    >>> ens.k, ens.lengths, ens.mean_length
    (1, (2, 3), 2.5)
    """

    mode = 'explicit'
    codes = None

    def __init__(self, codes, pmf, name=None):
        codes = tuple(codes)
        if not codes:
            raise EnsembleError("the ensemble has no codes")
        if not all(isinstance(c, LinearCode) for c in codes):
            raise EnsembleError("the ensemble candidates must be linear codes")

        dimensions = sorted({c.k for c in codes})
        if len(dimensions) > 1:
            msg = "the ensemble mixes codes of dimensions {}"
            raise MixedDimension(msg.format(dimensions))

        self.codes = codes
        super().__init__(k=dimensions[0], pmf=pmf, name=name)

    @property
    def lengths(self):
        return tuple(c.n for c in self.codes)

    @property
    def labels(self):
        return tuple(c.generator_string for c in self.codes)

    def with_pmf(self, pmf, name=None):
        return ExplicitEnsemble(self.codes, pmf, name=name)

    def code_for(self, index, rng):
        return self.codes[index]


class RandomEnsemble(Ensemble):
    """An ensemble of code lengths picked with the p.m.f. Q, each user drawing
    its generator matrix uniformly from the qualifying (k x n) matrices.

    Parameters
    ----------
    k : int
        The dimension.
    lengths : Sequence[int]
        The distinct candidate lengths, each greater than k.
    pmf : Sequence[float]
        The probability of each length.
    matrices : Optional[Dict[int, :obj:`LinearCode`]]
        Fixed generator matrices by length. Simulated users transmitting with
        a listed length use the fixed matrix instead of a random draw. The
        asymptotic analysis always uses the random-code average.
    name : Optional[str]
        A descriptive name.

    Examples
    --------
    >>> ens = RandomEnsemble(2, [3, 4], [2 / 3, 1 / 3])
    >>> round(ens.rate, 9)
    0.6
    """

    mode = 'random'
    matrices = None

    def __init__(self, k, lengths, pmf, matrices=None, name=None):
        lengths = tuple(int(n) for n in lengths)
        if len(set(lengths)) != len(lengths):
            msg = "the ensemble lengths {} are not distinct"
            raise EnsembleError(msg.format(lengths))
        for n in lengths:
            check_random_size(k, n)

        matrices = dict(matrices or {})
        for n, code in matrices.items():
            if code.k != k:
                msg = ("the ({},{}) matrix doesn't have the ensemble "
                       "dimension {}")
                raise MixedDimension(msg.format(code.n, code.k, k))
            if code.n != n:
                msg = "the matrix listed for length {} has length {}"
                raise EnsembleError(msg.format(n, code.n))

        self._lengths = lengths
        self.matrices = matrices
        super().__init__(k=k, pmf=pmf, name=name)

    @property
    def lengths(self):
        return self._lengths

    @property
    def labels(self):
        return tuple(str(n) for n in self._lengths)

    def with_pmf(self, pmf, name=None):
        return RandomEnsemble(self.k, self._lengths, pmf,
                              matrices=self.matrices, name=name)

    def code_for(self, index, rng):
        n = self._lengths[index]
        code = self.matrices.get(n)
        return code if code is not None else sample_generator(self.k, n, rng)


def fingerprint(ensemble):
    """A stable md5 digest of an ensemble's flavor, dimension, candidates and
    p.m.f.

    Examples
    --------
    >>> a = RandomEnsemble(2, [3, 4], [2 / 3, 1 / 3])
    >>> b = RandomEnsemble(2, [4, 3], [1 / 3, 2 / 3])
    >>> fingerprint(a) == fingerprint(b)
    True
    >>> fingerprint(a) == fingerprint(a.with_pmf([1 / 3, 2 / 3]))
    False
    """
    items = ['{}={:.12g}'.format(label, p) for label, p in ensemble.entries]
    matrices = getattr(ensemble, 'matrices', None) or dict()
    items += ['matrix={}'.format(c.generator_string)
              for c in matrices.values()]
    return hash_items('mode={}'.format(ensemble.mode),
                      'k={}'.format(ensemble.k), *items)
