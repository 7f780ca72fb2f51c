import itertools

import numpy as np
import pytest

from codedaloha.codes import (LinearCode, InvalidGenerator, repetition_code,
                              spc_code)
from codedaloha.ensembles import ExplicitEnsemble, RandomEnsemble


def pytest_collection_modifyitems(config, items):
    """Run the slow statistical tests last."""
    slow_items = [item for item in items
                  if item.get_closest_marker('slow') is not None]
    fast_items = [item for item in items
                  if item.get_closest_marker('slow') is None]

    items.clear()
    items += fast_items + slow_items


@pytest.fixture(scope='session')
def spc2():
    """The (3,2) single parity-check code"""
    return spc_code(2)


@pytest.fixture(scope='session')
def rep2():
    """The (2,1) repetition code"""
    return repetition_code(2)


@pytest.fixture
def irsa_ensemble(rep2):
    """An IRSA ensemble over the (2,1), (3,1) and (6,1) repetition codes"""
    return ExplicitEnsemble([rep2, repetition_code(3), repetition_code(6)],
                            [0.554016, 0.261312, 0.184672])


@pytest.fixture
def random_ensemble():
    """A k=2 random-code ensemble with the rate 3/5"""
    return RandomEnsemble(2, [3, 4], [2 / 3, 1 / 3])


@pytest.fixture(scope='session')
def all_codes():
    """Return a function that lists every qualifying (k x n) generator,
    as bit-packed row tuples, by brute force."""
    def _all_codes(k, n):
        codes = []
        for rows in itertools.product(range(1, 1 << n), repeat=k):
            try:
                codes.append(LinearCode(rows, n=n))
            except InvalidGenerator:
                continue
        return codes
    return _all_codes


@pytest.fixture
def rng():
    return np.random.default_rng(2010)
