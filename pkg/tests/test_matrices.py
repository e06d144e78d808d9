import itertools

import numpy as np
import pytest

from conftest import random_bits
from hammingcode import (
    BinaryMatrix,
    CodeParams,
    ColumnPermutation,
    InvalidInputError,
    compute_checking_number,
    encode,
    find_column_permutation,
    generator_matrix,
    parity_check_interleaved,
    parity_check_systematic,
)


def test_interleaved_rows_74(h74):
    h = parity_check_interleaved(h74)
    assert h.to_grid().splitlines() == ["1010101", "0110011", "0001111"]


def test_columns_are_binary_positions(small_code):
    h = parity_check_interleaved(small_code)
    assert h.shape == (small_code.k, small_code.n)
    for p in range(1, small_code.n + 1):
        col = h.column(p)
        assert sum(b << i for i, b in enumerate(col)) == p


def test_generator_74(h74):
    g = generator_matrix(h74)
    assert g.shape == (4, 7)
    assert g.to_grid().splitlines()[0] == "1110000"
    assert (g @ parity_check_interleaved(h74).T).is_zero()


def test_generator_31():
    assert generator_matrix(CodeParams(1, 2)).to_grid() == "111"


def test_generator_rows_are_unit_encodings(small_code):
    g = generator_matrix(small_code)
    for j, row in enumerate(np.eye(small_code.m, dtype=np.uint8)):
        assert tuple(g.array[j].tolist()) == encode(row, small_code).bits
    assert (g @ parity_check_interleaved(small_code).T).is_zero()


def test_systematic_74(h74):
    hs = parity_check_systematic(h74)
    h = parity_check_interleaved(h74)
    for j, source in enumerate((3, 5, 6, 7, 1, 2, 4), start=1):
        assert hs.column(j) == h.column(source)
    assert np.array_equal(hs.array[:, 4:], np.eye(3, dtype=np.uint8))


def test_systematic_31():
    hs = parity_check_systematic(CodeParams(1, 2))
    assert hs.to_grid().splitlines() == ["110", "101"]


def test_systematic_rank(small_code):
    hs = parity_check_systematic(small_code)
    k = small_code.k
    assert np.array_equal(hs.array[:, -k:], np.eye(k, dtype=np.uint8))
    assert hs.rank() == k
    assert parity_check_interleaved(small_code).rank() == k


def test_permutation_interleaved_to_systematic(h74):
    perm = find_column_permutation(parity_check_interleaved(h74), parity_check_systematic(h74))
    assert perm.mapping == (3, 5, 6, 7, 1, 2, 4)


def test_permutation_always_found(small_code):
    h = parity_check_interleaved(small_code)
    hs = parity_check_systematic(small_code)
    perm = find_column_permutation(h, hs)
    assert perm is not None
    assert h.permute_columns(perm) == hs
    assert hs.permute_columns(perm.inverse()) == h


def test_permutation_identity(h74):
    h = parity_check_interleaved(h74)
    assert find_column_permutation(h, h).is_identity


def test_permutation_absent_after_toggle(h74):
    h = parity_check_interleaved(h74)
    a = h.array.copy()
    a[0, 2] ^= 1
    assert find_column_permutation(h, BinaryMatrix(a)) is None


def test_permutation_with_repeated_columns():
    h1 = BinaryMatrix([[1, 1, 0], [0, 0, 1]])
    h2 = BinaryMatrix([[0, 1, 1], [1, 0, 0]])
    perm = find_column_permutation(h1, h2)
    assert h1.permute_columns(perm) == h2


def test_permutation_shape_mismatch(h74):
    with pytest.raises(InvalidInputError):
        find_column_permutation(parity_check_interleaved(h74), generator_matrix(h74))


def test_column_permutation_validates():
    with pytest.raises(InvalidInputError):
        ColumnPermutation((1, 1, 3))


def test_matrix_path_equals_equation_path(small_code):
    h = parity_check_interleaved(small_code)
    rng = np.random.default_rng(21)
    for word in random_bits(rng, (300, small_code.n)):
        syn = h @ word
        assert sum(int(b) << i for i, b in enumerate(syn)) == compute_checking_number(word, small_code).value


@pytest.mark.parametrize("m, k", [(1, 2), (3, 3), (4, 3), (5, 4), (11, 4)])
def test_codewords_fill_null_space(m, k):
    params = CodeParams(m, k)
    h = parity_check_interleaved(params)
    g = generator_matrix(params)
    everything = np.array(list(itertools.product((0, 1), repeat=params.n)), dtype=np.uint8)
    null = everything[~((everything.astype(np.int64) @ h.array.T.astype(np.int64)) & 1).any(axis=1)]
    assert len(null) == 2**m
    span = (np.array(list(itertools.product((0, 1), repeat=m)), dtype=np.int64) @ g.array.astype(np.int64)) & 1
    assert {r.tobytes() for r in null} == {r.astype(np.uint8).tobytes() for r in span}


def test_grid_round_trip(h74):
    h = parity_check_interleaved(h74)
    assert BinaryMatrix.from_grid(h.to_grid()) == h
    assert len(h.entries) == h.rows * h.cols


def test_rank_examples():
    assert BinaryMatrix([[1, 1], [1, 1]]).rank() == 1
    assert BinaryMatrix([[0, 0], [0, 0]]).rank() == 0
    assert BinaryMatrix([[1, 0, 1], [0, 1, 1], [1, 1, 0]]).rank() == 2
