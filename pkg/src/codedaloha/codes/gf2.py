"""
GF(2) linear algebra on bit-packed rows.

A row of a binary matrix is stored as an int whose bit ``j`` is the entry in
column ``j``. A column is stored the same way, with bit ``i`` holding the
entry in row ``i``.
"""


def reduce_basis(rows):
    """Reduce a collection of bit-packed vectors into an echelon basis.

    Parameters
    ----------
    rows : Iterable[int]
        The bit-packed vectors.

    Returns
    -------
    basis : List[int]
        Basis vectors with distinct leading bits, sorted in decreasing order.

    Examples
    --------
    >>> reduce_basis([0b011, 0b110, 0b101])
    [5, 3]
    """
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def rank(rows):
    """The rank over GF(2) of a matrix given as bit-packed rows, computed by
    Gaussian elimination.

    Examples
    --------
    >>> rank([0b01, 0b10])
    2
    >>> rank([0b000, 0b000])
    0
    >>> rank([0b011, 0b110, 0b101])
    2
    """
    return len(reduce_basis(rows))


def in_span(basis, vector):
    """True if the vector lies in the span of a basis from
    :func:`reduce_basis`.

    Examples
    --------
    >>> in_span(reduce_basis([0b01, 0b11]), 0b10)
    True
    >>> in_span(reduce_basis([0b01]), 0b10)
    False
    """
    for b in basis:
        vector = min(vector, vector ^ b)
    return vector == 0


def column_span_rank(columns, mask=None):
    """The rank of the bit-packed columns at the positions set in a mask.

    Parameters
    ----------
    columns : Sequence[int]
        The columns of a matrix.
    mask : Optional[int]
        The bit-packed positions of the selected columns. If None, every
        column is selected.

    Examples
    --------
    >>> column_span_rank([0b01, 0b11, 0b10])
    2
    >>> column_span_rank([0b01, 0b11, 0b10], mask=0b101)
    1
    """
    if mask is None:
        return rank(columns)
    return rank(c for j, c in enumerate(columns) if (mask >> j) & 1)


def transpose(vectors, length):
    """Transpose bit-packed rows into bit-packed columns (or vice versa).

    Parameters
    ----------
    vectors : Sequence[int]
        The bit-packed rows.
    length : int
        The number of columns (bits per row).

    Returns
    -------
    columns : Tuple[int]
        The ``length`` bit-packed columns.

    Examples
    --------
    >>> transpose([0b0011, 0b1110], 4)
    (1, 3, 2, 2)
    """
    return tuple(sum(((row >> j) & 1) << i for i, row in enumerate(vectors))
                 for j in range(length))


def weight(vector):
    """The Hamming weight of a bit-packed vector.

    Examples
    --------
    >>> weight(0b1011)
    3
    """
    return bin(vector).count('1')


def bits_to_str(vector, length):
    """Convert a bit-packed vector to its '0'/'1' string, column 0 first.

    Examples
    --------
    >>> bits_to_str(0b1110, 4)
    '0111'
    """
    return ''.join(str((vector >> j) & 1) for j in range(length))


def str_to_bits(string):
    """Convert a '0'/'1' string, column 0 first, to a bit-packed vector.

    Examples
    --------
    >>> str_to_bits('0111')
    14
    """
    return sum(int(c) << j for j, c in enumerate(string))
