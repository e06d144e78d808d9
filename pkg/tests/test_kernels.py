"""The numba and numpy backends must agree bit for bit."""

import math

import numpy as np
import pytest

from conftest import random_bits
from hammingcode import CodeParams, _kernels
from hammingcode._kernels import _numpy

pytestmark = pytest.mark.skipif("numba" not in _kernels.BACKENDS, reason="numba unavailable")

CODES = [CodeParams(1, 2), CodeParams(3, 3), CodeParams(4, 3), CodeParams(11, 4), CodeParams(12, 5)]


@pytest.fixture(scope="module")
def nb():
    return _kernels.BACKENDS["numba"]


# SplitMix64 reference outputs for seed 1234567 (published test vector)
SPLITMIX_1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]


def splitmix_reference(seed, count):
    mask = (1 << 64) - 1
    state, out = seed, []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


@pytest.mark.parametrize("backend", ["numpy", "numba"])
def test_splitmix_vector(backend):
    draws = _kernels.BACKENDS[backend].splitmix64(1234567, 0, 5)
    assert draws.tolist() == SPLITMIX_1234567


@pytest.mark.parametrize("backend", ["numpy", "numba"])
@pytest.mark.parametrize("seed", [0, 7, 2**64 - 1])
def test_splitmix_offsets(backend, seed):
    ref = splitmix_reference(seed, 40)
    impl = _kernels.BACKENDS[backend]
    assert impl.splitmix64(seed, 0, 40).tolist() == ref
    assert impl.splitmix64(seed, 17, 23).tolist() == ref[17:]


@pytest.mark.parametrize("params", CODES, ids=str)
def test_encode_decode_agree(nb, params):
    rng = np.random.default_rng(params.n)
    idx = params.data_index_array
    data = random_bits(rng, (500, params.m))
    assert np.array_equal(
        _numpy.encode_blocks(data, idx, params.n, params.k),
        nb.encode_blocks(data, idx, params.n, params.k),
    )
    words = random_bits(rng, (500, params.n))
    assert np.array_equal(_numpy.group_syndromes(words, params.k), nb.group_syndromes(words, params.k))
    d1, s1 = _numpy.decode_blocks(words, idx, params.k)
    d2, s2 = nb.decode_blocks(words, idx, params.k)
    assert np.array_equal(d1, d2) and np.array_equal(s1, s2)


@pytest.mark.parametrize("params", CODES, ids=str)
def test_codeword_weights_agree(nb, params):
    idx = params.data_index_array
    assert np.array_equal(
        _numpy.codeword_weights(idx, params.n, params.k), nb.codeword_weights(idx, params.n, params.k)
    )


@pytest.mark.parametrize("p_e", [0.0, 0.01, 0.3, 1.0])
def test_bsc_mask_agree(nb, p_e):
    th = math.ceil(p_e * 2**53)
    assert np.array_equal(_numpy.bsc_mask(99, 5, 40, 7, th), nb.bsc_mask(99, 5, 40, 7, th))


@pytest.mark.parametrize("p_e", [0.0, 0.05, 0.5])
def test_block_failures_agree(nb, p_e):
    params = CodeParams(4, 3)
    th = math.ceil(p_e * 2**53)
    args = (params.data_index_array, params.n, params.k, th, 3, 70_000)
    assert _numpy.count_block_failures(*args) == nb.count_block_failures(*args)


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("HAMMINGCODE_DISABLE_NUMBA", "1")
    assert _kernels._pick() is _numpy
    monkeypatch.setenv("HAMMINGCODE_DISABLE_NUMBA", "0")
    assert _kernels._pick() is _kernels.BACKENDS["numba"]
