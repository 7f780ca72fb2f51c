"""
Tests for binary linear block codes.
"""
import itertools
import pickle
from math import comb

import pytest

from codedaloha.codes import (LinearCode, parse_generator, repetition_code,
                              spc_code, info_functions, weight_enumerator,
                              min_distance, code_profile, erasure_map_decode,
                              InvalidGenerator, MatrixParseError)
from codedaloha.codes.gf2 import rank, reduce_basis, in_span, weight


def test_linear_code_construction():
    """Test the creation of codes from string and bit-packed rows"""
    # 1. String rows
    code = LinearCode(['1100', '0111'])
    assert (code.n, code.k) == (4, 2)
    assert code.generator_string == '1100,0111'
    assert code.label == '(4,2)'

    # 2. Bit-packed rows give the same code
    assert LinearCode([0b0011, 0b1110], n=4) == code
    assert hash(LinearCode([0b0011, 0b1110], n=4)) == hash(code)

    # 3. Codes are immutable and picklable
    with pytest.raises(AttributeError):
        code.n = 5
    assert pickle.loads(pickle.dumps(code)) == code


def test_linear_code_validation():
    """Test the rejection of invalid generators"""
    # 1. Rank deficient
    with pytest.raises(InvalidGenerator):
        LinearCode(['110', '110'])

    # 2. Idle column
    with pytest.raises(InvalidGenerator):
        LinearCode(['1100', '0101'])

    # 3. A weight-1 codeword: deleting column 2 reduces the rank
    with pytest.raises(InvalidGenerator):
        LinearCode(['110', '001'])

    # 4. Out of the supported range
    with pytest.raises(InvalidGenerator):
        LinearCode(['1'])
    with pytest.raises(InvalidGenerator):
        LinearCode(['1' * 17])
    with pytest.raises(InvalidGenerator):
        LinearCode([1, 2, 4, 8, 16], n=10)

    # 5. Bit-packed rows need a length
    with pytest.raises(InvalidGenerator):
        LinearCode([0b11])


def test_parse_generator():
    """Test the parsing of the comma-separated rows notation"""
    assert parse_generator('1100,0111').n == 4
    assert parse_generator(' 110 ,\n 011 ') == parse_generator('110,011')

    for text in ('1102', '11,,11', '', 'a1,11'):
        with pytest.raises(MatrixParseError):
            parse_generator(text)

    # Rows with different lengths
    with pytest.raises(MatrixParseError) as e:
        parse_generator('110,0111', lineno=7)
    assert e.value.lineno == 7
    assert 'line 7' in str(e.value)


def test_constructors():
    """Test the repetition and single parity-check codes"""
    for n in range(2, 9):
        code = repetition_code(n)
        assert (code.n, code.k, min_distance(code)) == (n, 1, n)

    for k in range(1, 5):
        code = spc_code(k)
        assert (code.n, code.k, min_distance(code)) == (k + 1, k, 2)
        # Every pair of positions supports a weight-2 codeword
        assert code.profile.a2 == comb(k + 1, 2)


def test_code_profile_examples(spc2):
    """Test the profiles of small codes"""
    # 1. The (3,2) SPC code
    assert info_functions(spc2) == (0, 3, 6, 2)
    assert weight_enumerator(spc2) == (1, 0, 3, 0)

    # 2. The (4,2) run-of-ones code
    code = parse_generator('1100,0111')
    assert code_profile(code).d_min == 2
    assert code_profile(code).a2 == 1

    # 3. Repetition codes have no weight-2 codeword beyond n=2
    assert repetition_code(3).profile.a2 == 0
    assert repetition_code(2).profile.a2 == 1


def test_info_functions_brute_force(all_codes):
    """Test the information functions against the ranks of every column
    subset"""
    for k, n in ((1, 3), (2, 4), (2, 5), (3, 5)):
        for code in all_codes(k, n)[:50]:
            expected = [0] * (n + 1)
            for g in range(n + 1):
                for subset in itertools.combinations(code.columns, g):
                    expected[g] += rank(subset)
            assert info_functions(code) == tuple(expected)


def test_weight_enumerator_identities(all_codes):
    """Test that the weight enumerators count 2^k codewords"""
    for code in all_codes(2, 5):
        enum = weight_enumerator(code)
        assert sum(enum) == 4
        assert enum[0] == 1
        assert min_distance(code) >= 2


def test_erasure_map_decode(spc2):
    """Test MAP erasure decoding"""
    # 1. Two known positions of the SPC code recover the third
    assert erasure_map_decode(spc2, {0, 1}) == {2}
    assert erasure_map_decode(spc2, [1, 2]) == {0}

    # 2. One known position recovers nothing
    assert erasure_map_decode(spc2, {0}) == frozenset()

    # 3. Any known position of a repetition code recovers the others
    assert erasure_map_decode(repetition_code(4), {2}) == {0, 1, 3}

    # 4. A fully known code recovers nothing new
    assert erasure_map_decode(spc2, {0, 1, 2}) == frozenset()

    # 5. Positions out of range
    with pytest.raises(IndexError):
        erasure_map_decode(spc2, {3})


def test_recoverable_mask_rank(all_codes):
    """Test that positions become recoverable exactly when the known columns
    reach rank k"""
    for code in all_codes(2, 4):
        full = (1 << code.n) - 1
        for known in range(1 << code.n):
            mask = known | code.recoverable_mask(known)
            if code.known_rank(known) == code.k:
                assert mask == full
            else:
                assert mask != full


def random_invertible(k, rng):
    """A random invertible (k x k) matrix as bit-packed rows."""
    while True:
        rows = [int(r) for r in rng.integers(1, 1 << k, size=k)]
        if rank(rows) == k:
            return rows


def test_code_profile_invariance(all_codes, rng):
    """Test that the profile depends on the code, not on its generator"""
    codes = all_codes(2, 5)[::20] + [parse_generator('11100,00111'),
                                     parse_generator('1100,0110,0011'),
                                     spc_code(4)]
    for code in codes:
        for _ in range(3):
            T = random_invertible(code.k, rng)
            rows = []
            for t in T:
                row = 0
                for i, r in enumerate(code.rows):
                    if (t >> i) & 1:
                        row ^= r
                rows.append(row)
            assert code_profile(LinearCode(rows, n=code.n)) == \
                code_profile(code)


def test_erasure_map_decode_monotone(all_codes):
    """Test that knowing more positions never recovers fewer"""
    for code in all_codes(2, 4)[::3] + [spc_code(3)]:
        positions = range(code.n)
        for r in range(code.n + 1):
            for known in itertools.combinations(positions, r):
                recovered = erasure_map_decode(code, known)
                for extra in positions:
                    larger = set(known) | {extra}
                    assert recovered <= (erasure_map_decode(code, larger) |
                                         larger)


def test_recovery_from_other_positions(all_codes):
    """Test that the minimum distance is at least 2 exactly when every
    position is recovered from all the others"""
    # 1. Valid codes
    for code in all_codes(2, 5)[::10] + [repetition_code(2), spc_code(4)]:
        for j in range(code.n):
            others = set(range(code.n)) - {j}
            assert j in erasure_map_decode(code, others)

    # 2. Full rank matrices, with and without weight-1 codewords
    n = 4
    for rows in itertools.product(range(1, 1 << n), repeat=2):
        if rank(rows) != 2:
            continue
        columns = [sum(((r >> j) & 1) << i for i, r in enumerate(rows))
                   for j in range(n)]
        codewords = [0, rows[0], rows[1], rows[0] ^ rows[1]]
        d_min = min(weight(c) for c in codewords[1:])
        recovered = all(in_span(reduce_basis(columns[:j] + columns[j + 1:]),
                                columns[j])
                        for j in range(n))
        assert (d_min >= 2) == recovered
