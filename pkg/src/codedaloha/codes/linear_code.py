"""
Binary linear block codes used as local codes of a burst.
"""
from collections import namedtuple
from functools import lru_cache

import numpy as np
import regex

from .exceptions import InvalidGenerator, MatrixParseError
from .gf2 import (rank, reduce_basis, in_span, transpose, weight,
                  bits_to_str, str_to_bits, column_span_rank)
from .. import settings


class CodeProfile(namedtuple('CodeProfile', 'info_funcs weight_enum d_min')):
    """The exact properties of a linear block code.

    Attributes
    ----------
    info_funcs : Tuple[int]
        The un-normalized information functions e_0..e_n. The g-th entry is
        the sum of the ranks of all submatrices made of g generator columns.
    weight_enum : Tuple[int]
        The number of codewords A_0..A_n of each Hamming weight.
    d_min : int
        The minimum distance.
    """

    @property
    def n(self):
        return len(self.info_funcs) - 1

    @property
    def k(self):
        return self.info_funcs[-1]

    @property
    def a2(self):
        """The number of weight-2 codewords"""
        return self.weight_enum[2] if self.n >= 2 else 0


class LinearCode(object):
    """A binary (n, k) linear block code held as a generator matrix.

    A LinearCode that exists is always well-formed: the generator has rank
    k, no all-zero column and no column whose deletion reduces the rank
    (equivalently, the minimum distance is at least 2).

    Parameters
    ----------
    rows : Sequence[Union[int, str]]
        The k generator rows, either bit-packed (bit j is column j) or as
        '0'/'1' strings.
    n : Optional[int]
        The code length. Required when the rows are bit-packed ints.

    Raises
    ------
    InvalidGenerator
        Raised if the generator violates any of the constraints.

    Examples
    --------
    >>> code = LinearCode(['1100', '0111'])
    >>> code.n, code.k
    (4, 2)
    >>> code
    <LinearCode (4,2) 1100,0111>
    """

    __slots__ = ('k', 'n', 'rows', 'columns')

    def __init__(self, rows, n=None):
        rows = list(rows)
        if rows and all(isinstance(r, str) for r in rows):
            lengths = {len(r) for r in rows}
            if len(lengths) != 1:
                msg = "generator rows have different lengths: {}"
                raise InvalidGenerator(msg.format(sorted(lengths)))
            n = lengths.pop()
            rows = [str_to_bits(r) for r in rows]

        k = len(rows)
        if n is None:
            raise InvalidGenerator("the code length must be specified for "
                                   "bit-packed generator rows")
        if not 1 <= k < n <= settings.max_code_length:
            msg = ("a ({},{}) code is outside the supported range "
                   "1 <= k < n <= {}")
            raise InvalidGenerator(msg.format(n, k,
                                              settings.max_code_length))
        if k > settings.max_code_dimension:
            msg = "codes of dimension {} exceed the supported dimension {}"
            raise InvalidGenerator(msg.format(k,
                                              settings.max_code_dimension))
        if any(r >> n for r in rows):
            raise InvalidGenerator("generator rows have more than {} "
                                   "columns".format(n))

        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'rows', tuple(rows))
        object.__setattr__(self, 'columns', transpose(rows, n))
        self._validate()

    def _validate(self):
        if rank(self.rows) != self.k:
            msg = "the generator of {!r} does not have rank {}"
            raise InvalidGenerator(msg.format(self, self.k))

        idle = [j for j, c in enumerate(self.columns) if c == 0]
        if idle:
            msg = "the generator of {!r} has idle columns {}"
            raise InvalidGenerator(msg.format(self, idle))

        # A column whose deletion reduces the rank is a weight-1 codeword
        full = (1 << self.n) - 1
        for j in range(self.n):
            if column_span_rank(self.columns, full ^ (1 << j)) < self.k:
                msg = ("deleting column {} of {!r} reduces the rank: the "
                       "minimum distance is below 2")
                raise InvalidGenerator(msg.format(j, self))

    def __setattr__(self, key, value):
        raise AttributeError("LinearCode objects are immutable")

    def __repr__(self):
        return "<LinearCode ({},{}) {}>".format(self.n, self.k,
                                                self.generator_string)

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and
                (self.n, self.rows) == (other.n, other.rows))

    def __hash__(self):
        return hash((self.n, self.rows))

    def __reduce__(self):
        return self.__class__, (self.rows, self.n)

    @property
    def generator_string(self):
        """The generator in the comma-separated rows notation."""
        return ','.join(bits_to_str(r, self.n) for r in self.rows)

    @property
    def label(self):
        """The (n,k) label of the code."""
        return "({},{})".format(self.n, self.k)

    @property
    def profile(self):
        """The :class:`CodeProfile` of this code."""
        return code_profile(self)

    def recoverable_mask(self, known_mask):
        """The bit-packed positions recoverable from the known positions.

        See :func:`erasure_map_decode`.
        """
        return _recoverable_mask(self.columns, known_mask)

    def known_rank(self, known_mask):
        """The rank of the generator columns at the known positions."""
        return column_span_rank(self.columns, known_mask)


_re_generator = regex.compile(r'^[01]+(,[01]+)*$')


def parse_generator(text, lineno=None):
    """Parse a generator matrix from comma-separated '0'/'1' rows.

    Parameters
    ----------
    text : str
        The generator rows, e.g. "1100,0111".
    lineno : Optional[int]
        The line number of the text, for diagnostics.

    Returns
    -------
    code : :obj:`LinearCode`
        The parsed code.

    Raises
    ------
    MatrixParseError
        Raised if the notation is malformed or rows have different lengths.
    InvalidGenerator
        Raised if the generator violates the code constraints.

    Examples
    --------
    >>> parse_generator('110, 011')
    <LinearCode (3,2) 110,011>
    """
    string = regex.sub(r'\s+', '', text)
    if not _re_generator.match(string):
        msg = ("'{}' is not a generator matrix of comma-separated '0'/'1' "
               "rows".format(text.strip()))
        raise MatrixParseError(msg, lineno=lineno)

    rows = string.split(',')
    if len({len(r) for r in rows}) != 1:
        msg = "the rows of '{}' have different lengths".format(string)
        raise MatrixParseError(msg, lineno=lineno)
    return LinearCode(rows)


def repetition_code(n):
    """The (n,1) repetition code.

    Examples
    --------
    >>> repetition_code(3)
    <LinearCode (3,1) 111>
    """
    return LinearCode(['1' * n])


def spc_code(k):
    """The (k+1,k) single parity-check code, in systematic form.

    Examples
    --------
    >>> spc_code(2)
    <LinearCode (3,2) 101,011>
    """
    n = k + 1
    rows = [(1 << i) | (1 << k) for i in range(k)]
    return LinearCode(rows, n=n)


def info_functions(code):
    """The un-normalized information functions e_0..e_n of a code.

    The g-th information function is the sum of the ranks of the submatrices
    of all C(n, g) choices of g generator columns. The ranks of every column
    subset are accumulated by doubling the subset table one column at a
    time, tracking the span of each subset as a bitmask over the 2^k vectors
    of GF(2)^k.

    Examples
    --------
    >>> info_functions(parse_generator('110,011'))
    (0, 3, 6, 2)
    """
    size = 1 << code.k
    spans = np.ones(1, dtype=np.uint32)  # the span of the empty set is {0}
    ranks = np.zeros(1, dtype=np.int64)
    sizes = np.zeros(1, dtype=np.int64)

    for c in code.columns:
        new = (((spans >> c) & 1) == 0).astype(np.int64)
        translated = np.zeros_like(spans)
        for x in range(size):
            translated |= ((spans >> x) & 1) << (x ^ c)
        spans = np.concatenate([spans, spans | translated])
        ranks = np.concatenate([ranks, ranks + new])
        sizes = np.concatenate([sizes, sizes + 1])

    totals = np.bincount(sizes, weights=ranks, minlength=code.n + 1)
    return tuple(int(v) for v in np.rint(totals))


def weight_enumerator(code):
    """The number of codewords A_0..A_n of each Hamming weight.

    Examples
    --------
    >>> weight_enumerator(parse_generator('1100,0111'))
    (1, 0, 1, 2, 0)
    """
    counts = [0] * (code.n + 1)
    for message in range(1 << code.k):
        codeword = 0
        for i, row in enumerate(code.rows):
            if (message >> i) & 1:
                codeword ^= row
        counts[weight(codeword)] += 1
    return tuple(counts)


def min_distance(code):
    """The minimum distance of a code.

    Examples
    --------
    >>> min_distance(repetition_code(3))
    3
    """
    weight_enum = weight_enumerator(code)
    return min(w for w in range(1, code.n + 1) if weight_enum[w] > 0)


@lru_cache(maxsize=None)
def code_profile(code):
    """The :class:`CodeProfile` (information functions, weight enumerator
    and minimum distance) of a code.

    Examples
    --------
    >>> code_profile(parse_generator('110,011'))
    CodeProfile(info_funcs=(0, 3, 6, 2), weight_enum=(1, 0, 3, 0), d_min=2)
    """
    weight_enum = weight_enumerator(code)
    d_min = min(w for w in range(1, code.n + 1) if weight_enum[w] > 0)
    return CodeProfile(info_funcs=info_functions(code),
                       weight_enum=weight_enum, d_min=d_min)


@lru_cache(maxsize=65536)
def _recoverable_mask(columns, known_mask):
    basis = reduce_basis(c for j, c in enumerate(columns)
                         if (known_mask >> j) & 1)
    recovered = 0
    for j, c in enumerate(columns):
        if not (known_mask >> j) & 1 and in_span(basis, c):
            recovered |= 1 << j
    return recovered


def erasure_map_decode(code, known):
    """MAP erasure decoding of a code.

    A position is recoverable when its generator column lies in the GF(2)
    span of the columns at the known positions.

    Parameters
    ----------
    code : :obj:`LinearCode`
        The code.
    known : Iterable[int]
        The known positions.

    Returns
    -------
    recoverable : FrozenSet[int]
        The positions, not already known, that are recovered.

    Raises
    ------
    IndexError
        Raised if a known position is outside the code length.

    Examples
    --------
    >>> spc = parse_generator('110,011')
    >>> sorted(erasure_map_decode(spc, {0, 1}))
    [2]
    >>> sorted(erasure_map_decode(spc, {0}))
    []
    """
    known_mask = 0
    for j in known:
        if not 0 <= j < code.n:
            msg = "position {} is outside the code length {}"
            raise IndexError(msg.format(j, code.n))
        known_mask |= 1 << j
    recovered = code.recoverable_mask(known_mask)
    return frozenset(j for j in range(code.n) if (recovered >> j) & 1)
