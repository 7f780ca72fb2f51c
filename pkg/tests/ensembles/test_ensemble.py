"""
Tests for code ensembles and their statistics.
"""
import itertools

import numpy as np
import pytest

from codedaloha.codes import repetition_code, spc_code, parse_generator
from codedaloha.ensembles import (ExplicitEnsemble, RandomEnsemble, stats,
                                  check_pmf, fingerprint, burst_coefficients,
                                  InvalidPmf, MixedDimension, EnsembleError,
                                  UnsupportedSize, sample_generator)
from codedaloha.codes.gf2 import reduce_basis, in_span


def test_check_pmf():
    """Test the validation of p.m.f.s"""
    assert check_pmf([1]) == (1.,)
    for pmf in ([], [0.5, 0.6], [1.5, -0.5], [float('nan'), 1.]):
        with pytest.raises(InvalidPmf):
            check_pmf(pmf)
    with pytest.raises(InvalidPmf):
        check_pmf([0.5, 0.5], size=3)


def test_explicit_ensemble(irsa_ensemble, rep2):
    """Test explicit ensembles"""
    # 1. Basic properties
    assert irsa_ensemble.k == 1
    assert irsa_ensemble.lengths == (2, 3, 6)
    assert irsa_ensemble.mean_length == pytest.approx(3.)
    assert irsa_ensemble.rate == pytest.approx(1 / 3)
    assert irsa_ensemble.labels == ('11', '111', '111111')

    # 2. Mixed dimensions and empty ensembles are rejected
    with pytest.raises(MixedDimension):
        ExplicitEnsemble([rep2, spc_code(2)], [0.5, 0.5])
    with pytest.raises(EnsembleError):
        ExplicitEnsemble([], [])

    # 3. Invalid p.m.f.s are rejected
    with pytest.raises(InvalidPmf):
        ExplicitEnsemble([rep2], [0.5])

    # 4. Draws follow the p.m.f.
    rng = np.random.default_rng(1)
    draws = irsa_ensemble.draw_types(rng, 20000)
    assert np.bincount(draws).tolist()[0] == pytest.approx(0.554016 * 20000,
                                                           rel=0.03)
    assert irsa_ensemble.code_for(2, rng) == repetition_code(6)


def test_random_ensemble(random_ensemble):
    """Test random-code ensembles"""
    assert random_ensemble.rate == pytest.approx(3 / 5)
    assert random_ensemble.labels == ('3', '4')

    # 1. Lengths must be distinct and supported
    with pytest.raises(EnsembleError):
        RandomEnsemble(2, [3, 3], [0.5, 0.5])
    with pytest.raises(EnsembleError):
        RandomEnsemble(2, [2], [1.])
    with pytest.raises(UnsupportedSize):
        RandomEnsemble(4, [5], [1.])

    # 2. Fixed matrices must match their length and dimension
    with pytest.raises(EnsembleError):
        RandomEnsemble(2, [3], [1.],
                       matrices={3: parse_generator('1100,0111')})
    with pytest.raises(MixedDimension):
        RandomEnsemble(2, [3], [1.], matrices={3: repetition_code(3)})

    # 3. Fixed matrices are used by the simulated users
    code = parse_generator('1100,0111')
    ens = RandomEnsemble(2, [4], [1.], matrices={4: code})
    assert ens.code_for(0, np.random.default_rng(0)) == code


def test_fingerprint(random_ensemble):
    """Test ensemble fingerprints"""
    same = RandomEnsemble(2, [4, 3], [1 / 3, 2 / 3], name='other')
    assert fingerprint(random_ensemble) == fingerprint(same)

    explicit = ExplicitEnsemble([spc_code(2)], [1.])
    assert fingerprint(explicit) != fingerprint(random_ensemble)

    # Named ensembles have slug ids, others a fingerprint id
    assert RandomEnsemble(2, [4], [1.], name='CSA R=1/2').ensemble_id == \
        'csa-r-1-2'
    assert random_ensemble.ensemble_id.startswith('ensemble-')


def test_burst_coefficients():
    """Test the burst-node coefficients of small codes"""
    # 1. The (3,2) SPC code
    assert list(burst_coefficients((0, 3, 6, 2))) == [0, 6, 3]

    # 2. Repetition codes have a single nonzero coefficient a_{n-1} = n
    for n in range(2, 8):
        a = burst_coefficients(repetition_code(n).profile.info_funcs)
        assert list(a) == [0] * (n - 1) + [n]


def test_stats_explicit(irsa_ensemble, spc2):
    """Test the statistics of explicit ensembles"""
    # 1. IRSA
    s = stats(irsa_ensemble)
    assert s.mean_length == pytest.approx(3.)
    assert s.rate == pytest.approx(1 / 3)
    assert s.power_increment == pytest.approx(3.)
    assert s.load_factor == pytest.approx(3.)
    assert s.avg_A2 == pytest.approx(0.554016)
    assert s.min_distance == 2
    assert s.edge_probs.sum() == pytest.approx(1.)

    # 2. The SPC code: q = 2p - p^2
    s = stats(ExplicitEnsemble([spc2], [1.]))
    for p in np.linspace(0., 1., 11):
        assert s.burst_sum(p) / s.mean_length == pytest.approx(2 * p - p * p)
    assert s.extrinsic_erasure(0.5) == [pytest.approx(0.75)]

    # 3. Vectorized burst sums agree with scalar burst sums
    xs = np.linspace(0., 1., 7)
    assert np.allclose(s.burst_sum(xs), [s.burst_sum(float(x)) for x in xs])

    # 4. The power-basis coefficients: 6x - 3x^2
    assert np.allclose(s.exit_power_coeffs, [0., 6., -3.])


def test_stats_random(random_ensemble):
    """Test the statistics of random-code ensembles"""
    s = stats(random_ensemble)
    assert s.avg_A2 == pytest.approx(2 / 3 * 3 + 1 / 3 * 4 / 3)
    assert s.k / (2 * s.avg_A2) == pytest.approx(0.409090909, abs=1e-9)
    assert s.d_mins == (2, 2)

    # The (3,2) random code is the SPC code up to column order
    spc = stats(ExplicitEnsemble([spc_code(2)], [1.]))
    assert np.allclose(s.a_coeffs[0], spc.a_coeffs[0])


def brute_force_extrinsic_erasure(code, x):
    """The probability that a position of a code stays unknown when every
    other position is erased with probability x, averaged over positions."""
    total = 0.
    for j, column in enumerate(code.columns):
        others = [i for i in range(code.n) if i != j]
        for r in range(code.n):
            for erased in itertools.combinations(others, r):
                basis = reduce_basis(code.columns[i] for i in others
                                     if i not in erased)
                if not in_span(basis, column):
                    total += x ** r * (1. - x) ** (code.n - 1 - r)
    return total / code.n


def test_extrinsic_erasure_brute_force(all_codes, rng):
    """Test the burst coefficients against MAP erasure decoding of every
    erasure pattern"""
    codes = ([repetition_code(n) for n in range(2, 9)] +
             [spc_code(k) for k in range(1, 5)] +
             all_codes(2, 4)[::6] + all_codes(2, 5)[::40] +
             [parse_generator(g) for g in ('1100,0111', '11100,00111',
                                           '11110000,01111111',
                                           '1000110,0100101,0010011,0001111',
                                           '10001101,01001011,00100111,'
                                           '00011110')] +
             [sample_generator(2, n, rng) for n in (6, 7, 8)] +
             [sample_generator(3, n, rng) for n in (4, 5, 6, 7, 8)])

    xs = np.linspace(0., 1., 11)
    for code in codes:
        s = stats(ExplicitEnsemble([code], [1.]))
        for x in xs:
            expected = brute_force_extrinsic_erasure(code, float(x))
            assert abs(s.extrinsic_erasure(float(x))[0] - expected) < 1e-12
