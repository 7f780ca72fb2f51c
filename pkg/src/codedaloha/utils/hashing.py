"""
Utilities for hashing ensembles and p.m.f.s into stable keys.
"""
import hashlib


def hash_items(*items, hashfunc=hashlib.md5, sort=True):
    """Create a unique text string hash from the given item objects.

    Parameters
    ----------
    *items : Tuple[obj, str, bytes]
        Items to use in calculating the hash. Items that aren't bytes are
        hashed from their string representation.
    hashfunc : Optional[func]
        The type of hash to use.
    sort : Optional[bool]
        If True, sort the items before calculating the hash. Enabling this
        option ensures that the items order does not change the hash.

    Returns
    -------
    hashdigest : str
        The hash digest string.

    Examples
    --------
    >>> hash_items('a', 'b') == hash_items('b', 'a')
    True
    >>> hash_items('a', 'b', sort=False) == hash_items('b', 'a', sort=False)
    False
    """
    hashes = list()

    for item in items:
        if isinstance(item, bytes):
            hashes.append(hashfunc(item).digest())
        else:
            hashes.append(hashfunc(str(item).encode()).digest())

    if sort:
        hashes = sorted(hashes)

    hashobj = hashfunc()
    for item in hashes:
        hashobj.update(item)
    return hashobj.hexdigest()


def quantize(values, quantum):
    """Round a sequence of floats onto a grid of the given quantum and return
    a hashable tuple of integers.

    Examples
    --------
    >>> quantize([0.5540161, 0.4459839], 1e-6)
    (554016, 445984)
    """
    return tuple(int(round(v / quantum)) for v in values)
