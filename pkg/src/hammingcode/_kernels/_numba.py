"""Numba-compiled batch kernels, twins of the functions in ``_numpy``."""

import numba as nb
import numpy as np

GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
S11 = np.uint64(11)
S27 = np.uint64(27)
S30 = np.uint64(30)
S31 = np.uint64(31)
S63 = np.uint64(63)

njit_kwargs = {"nogil": True, "cache": True}


@nb.njit(**njit_kwargs)
def _draw(seed, index):
    # all operands stay uint64: mixing in a signed int would promote to float64
    z = seed + GAMMA * (index + np.uint64(1))
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    return z ^ (z >> S31)


@nb.njit(**njit_kwargs)
def _syndrome(word, n, k):
    syn = 0
    for i in range(k):
        par = 0
        for p in range(1 << i, n + 1):
            if (p >> i) & 1:
                par ^= word[p - 1]
        syn |= par << i
    return syn


@nb.njit(**njit_kwargs)
def _fill_checks(word, n, k):
    for i in range(k):
        c = 1 << i
        par = 0
        for p in range(c + 1, n + 1):
            if (p >> i) & 1:
                par ^= word[p - 1]
        word[c - 1] = par


@nb.njit(**njit_kwargs)
def group_syndromes(words, k):
    rows, n = words.shape
    syn = np.empty(rows, dtype=np.int64)
    for r in range(rows):
        syn[r] = _syndrome(words[r], n, k)
    return syn


@nb.njit(**njit_kwargs)
def encode_blocks(data, data_idx, n, k):
    rows, m = data.shape
    out = np.zeros((rows, n), dtype=np.uint8)
    for r in range(rows):
        for j in range(m):
            out[r, data_idx[j]] = data[r, j]
        _fill_checks(out[r], n, k)
    return out


@nb.njit(**njit_kwargs)
def decode_blocks(words, data_idx, k):
    rows, n = words.shape
    m = data_idx.shape[0]
    data = np.empty((rows, m), dtype=np.uint8)
    syn = np.empty(rows, dtype=np.int64)
    for r in range(rows):
        s = _syndrome(words[r], n, k)
        syn[r] = s
        for j in range(m):
            c = data_idx[j]
            b = words[r, c]
            if c == s - 1:
                b ^= 1
            data[r, j] = b
    return data, syn


@nb.njit(**njit_kwargs)
def _splitmix64(seed, start, count):
    out = np.empty(count, dtype=np.uint64)
    for i in range(count):
        out[i] = _draw(seed, start + np.uint64(i))
    return out


def splitmix64(seed, start, count):
    return _splitmix64(np.uint64(seed), np.uint64(start), count)


@nb.njit(**njit_kwargs)
def _bsc_mask(seed, start, rows, cols, threshold):
    out = np.empty((rows, cols), dtype=np.uint8)
    idx = start
    for r in range(rows):
        for c in range(cols):
            out[r, c] = 1 if (_draw(seed, idx) >> S11) < threshold else 0
            idx += np.uint64(1)
    return out


def bsc_mask(seed, start, rows, cols, threshold):
    return _bsc_mask(np.uint64(seed), np.uint64(start), rows, cols, np.uint64(threshold))


@nb.njit(**njit_kwargs)
def _count_block_failures(data_idx, n, k, threshold, seed, trials):
    m = data_idx.shape[0]
    word = np.zeros(n, dtype=np.uint8)
    data = np.zeros(m, dtype=np.uint8)
    idx = np.uint64(0)
    failures = 0
    for _ in range(trials):
        word[:] = 0
        for j in range(m):
            data[j] = np.uint8(_draw(seed, idx) >> S63)
            idx += np.uint64(1)
            word[data_idx[j]] = data[j]
        _fill_checks(word, n, k)
        for c in range(n):
            if (_draw(seed, idx) >> S11) < threshold:
                word[c] ^= 1
            idx += np.uint64(1)
        s = _syndrome(word, n, k)
        if 1 <= s <= n:
            word[s - 1] ^= 1
        for j in range(m):
            if word[data_idx[j]] != data[j]:
                failures += 1
                break
    return failures


def count_block_failures(data_idx, n, k, threshold, seed, trials):
    return int(
        _count_block_failures(data_idx, n, k, np.uint64(threshold), np.uint64(seed), trials)
    )


@nb.njit(**njit_kwargs)
def codeword_weights(data_idx, n, k):
    m = data_idx.shape[0]
    total = 1 << m
    weights = np.empty(total, dtype=np.int64)
    word = np.zeros(n, dtype=np.uint8)
    for v in range(total):
        word[:] = 0
        for j in range(m):
            word[data_idx[j]] = (v >> (m - 1 - j)) & 1
        _fill_checks(word, n, k)
        w = 0
        for c in range(n):
            w += word[c]
        weights[v] = w
    return weights
