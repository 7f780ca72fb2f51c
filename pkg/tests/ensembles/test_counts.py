"""
Tests for the exact counts of random-code ensembles.
"""
import numpy as np
import pytest

from codedaloha.codes import info_functions, min_distance
from codedaloha.ensembles import (random_code_counts, expected_info_funcs,
                                  expected_a2, sample_generator,
                                  UnsupportedSize, EnsembleError)
from codedaloha.ensembles.counts import gaussian_binomial, check_random_size


def test_random_code_counts_brute_force(all_codes):
    """Test the counts against an enumeration of every generator matrix"""
    for k, n in ((1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (2, 6)):
        codes = all_codes(k, n)
        counts = random_code_counts(k, n)

        # 1. The number of qualifying matrices
        assert counts.J == len(codes)

        # 2. The average information functions
        average = np.mean([info_functions(c) for c in codes], axis=0)
        assert np.allclose(expected_info_funcs(k, n), average, atol=1e-12)

        # 3. The average number of weight-2 codewords, from the counts and
        # from the rank identity
        a2 = np.mean([c.profile.a2 for c in codes])
        assert counts.avg_a2 == pytest.approx(a2, abs=1e-12)
        assert expected_a2(k, n) == pytest.approx(a2, abs=1e-12)

        # 4. The smallest minimum distance
        assert counts.d_min == min(min_distance(c) for c in codes)


def test_expected_info_funcs_bounds(all_codes):
    """Test that the average information functions lie between those of the
    individual codes"""
    for k, n in ((2, 4), (2, 5), (2, 6)):
        table = np.array([info_functions(c) for c in all_codes(k, n)])
        expected = np.array(expected_info_funcs(k, n))
        assert (table.min(axis=0) - 1e-12 <= expected).all()
        assert (expected <= table.max(axis=0) + 1e-12).all()


def test_random_code_counts_examples():
    """Test hand-computed counts"""
    # 1. The (3,2) matrices are the orderings of the 3 nonzero columns
    counts = random_code_counts(2, 3)
    assert counts.J == 6
    assert counts.K[1] == (0, 6, 0)
    assert expected_a2(2, 3) == pytest.approx(3.)

    # 2. The (4,2) matrices
    counts = random_code_counts(2, 4)
    assert counts.J == 54
    assert expected_a2(2, 4) == pytest.approx(4 / 3)

    # 3. Each K[g] row counts every matrix once
    for g in range(5):
        assert sum(counts.K[g]) == counts.J


def test_avg_a2_consistency_k3():
    """Test the two weight-2 counts of k=3 ensembles"""
    for n in (4, 5, 6, 8):
        counts = random_code_counts(3, n)
        assert counts.avg_a2 == pytest.approx(expected_a2(3, n), rel=1e-12)


def test_check_random_size():
    """Test the size limits of random-code ensembles"""
    with pytest.raises(EnsembleError):
        check_random_size(2, 2)
    with pytest.raises(UnsupportedSize):
        check_random_size(4, 8)
    with pytest.raises(UnsupportedSize):
        check_random_size(2, 17)
    assert check_random_size(2, 12) == 91


def test_gaussian_binomial():
    """Test the number of subspaces of GF(2)^k"""
    assert [gaussian_binomial(4, r) for r in range(5)] == [1, 15, 35, 15, 1]
    assert gaussian_binomial(3, 4) == 0


def test_sample_generator(rng):
    """Test the draws of random generator matrices"""
    # 1. Draws qualify and have the requested size
    codes = [sample_generator(2, 4, rng) for _ in range(2000)]
    assert all((c.n, c.k) == (4, 2) for c in codes)

    # 2. Draws are uniform over the 54 qualifying matrices
    counts = {}
    for c in codes:
        counts[c] = counts.get(c, 0) + 1
    assert len(counts) == 54
    assert max(counts.values()) < 3 * 2000 / 54
