"""
A cache of the fitness of the p.m.f.s evaluated by the optimizer.
"""
import logging

import diskcache

from ..utils.hashing import hash_items, quantize
from .. import settings


class FitnessCache(object):
    """Fitness values keyed by a p.m.f. quantized on a fine grid.

    Values are always computed from the canonical p.m.f. of a key, the
    quantized cells divided by their sum, so that p.m.f.s sharing a key share
    a value whatever the order in which they're met.

    Parameters
    ----------
    directory : Optional[str]
        The directory of a persistent cache. If None, an in-memory dict is
        used.
    namespace : Optional[str]
        A key prefix that separates the entries of different problems sharing
        a persistent cache.

    Examples
    --------
    >>> cache = FitnessCache(namespace='demo')
    >>> cache.get_or_compute([0.5, 0.5], lambda pmf: pmf[0] / 2)
    0.25
    >>> cache.get_or_compute([0.5000001, 0.4999999], lambda pmf: 1.)
    0.25
    >>> cache.hits, cache.misses
    (1, 1)
    """

    def __init__(self, directory=None, namespace=''):
        self.directory = directory
        self.namespace = namespace
        self.db = diskcache.Cache(str(directory)) if directory else dict()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self.db)

    def __getitem__(self, pmf):
        return self.db[self.key(pmf)]

    def key(self, pmf):
        """The cache key of a p.m.f."""
        cells = quantize(pmf, settings.cache_quantum)
        return hash_items(self.namespace, *cells, sort=False)

    @staticmethod
    def canonical(pmf):
        """The p.m.f. on the quantization grid that stands for all the
        p.m.f.s with the same key.

        >>> FitnessCache.canonical([0.2500000001, 0.7499999999])
        (0.25, 0.75)
        """
        cells = quantize(pmf, settings.cache_quantum)
        total = sum(cells)
        return tuple(c / total for c in cells)

    def get_or_compute(self, pmf, func):
        """The cached fitness of the p.m.f., computed with func on its
        canonical p.m.f. and stored if missing."""
        return self.map_or_compute([pmf], func)[0]

    def map_or_compute(self, pmfs, func, pmap=map):
        """The cached fitness of each p.m.f.

        The missing values are computed once per key with
        pmap(func, canonical p.m.f.s), in the order the keys first appear,
        and stored before returning. Duplicated keys count as hits.
        """
        pmfs = list(pmfs)
        keys = [self.key(pmf) for pmf in pmfs]

        missing = dict()
        for key, pmf in zip(keys, pmfs):
            if key not in missing and self.db.get(key, None) is None:
                missing[key] = self.canonical(pmf)

        values = list(pmap(func, list(missing.values())))
        for key, value in zip(missing, values):
            self.db[key] = value

        self.misses += len(missing)
        self.hits += len(pmfs) - len(missing)
        return [self.db[key] for key in keys]

    def close(self):
        if isinstance(self.db, diskcache.Cache):
            logging.debug("Closing the fitness cache in "
                          "'{}'".format(self.directory))
            self.db.close()
