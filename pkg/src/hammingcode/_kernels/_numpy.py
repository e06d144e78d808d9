"""Pure-numpy batch kernels.

Every function here has a twin with the same signature in ``_numba`` and
must return identical results; ``tests/test_kernels.py`` holds them to that.
Words are ``uint8`` arrays of shape ``(N, n)``; column ``c`` is position ``c + 1``.
"""

import numpy as np

GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)

_CHUNK_TRIALS = 1 << 16


def _group_columns(n, k):
    # 0-based columns of each parity group; column 2**i - 1 is the group's check bit
    pos = np.arange(1, n + 1)
    return [np.flatnonzero((pos >> i) & 1) for i in range(k)]


def group_syndromes(words, k):
    n = words.shape[1]
    syn = np.zeros(words.shape[0], dtype=np.int64)
    for i, cols in enumerate(_group_columns(n, k)):
        syn |= (words[:, cols].sum(axis=1, dtype=np.int64) & 1) << i
    return syn


def encode_blocks(data, data_idx, n, k):
    out = np.zeros((data.shape[0], n), dtype=np.uint8)
    out[:, data_idx] = data
    for i, cols in enumerate(_group_columns(n, k)):
        # the group's own check column is still zero here
        out[:, (1 << i) - 1] = out[:, cols].sum(axis=1, dtype=np.int64) & 1
    return out


def decode_blocks(words, data_idx, k):
    n = words.shape[1]
    syn = group_syndromes(words, k)
    fixed = words.copy()
    rows = np.flatnonzero((syn >= 1) & (syn <= n))
    fixed[rows, syn[rows] - 1] ^= 1
    return fixed[:, data_idx], syn


def splitmix64(seed, start, count):
    counters = np.arange(1, count + 1, dtype=np.uint64) + np.uint64(start)
    z = np.uint64(seed) + GAMMA * counters
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


def bsc_mask(seed, start, rows, cols, threshold):
    draws = splitmix64(seed, start, rows * cols).reshape(rows, cols)
    return ((draws >> np.uint64(11)) < np.uint64(threshold)).astype(np.uint8)


def count_block_failures(data_idx, n, k, threshold, seed, trials):
    m = data_idx.shape[0]
    per_trial = m + n
    failures = 0
    for t0 in range(0, trials, _CHUNK_TRIALS):
        batch = min(_CHUNK_TRIALS, trials - t0)
        draws = splitmix64(seed, t0 * per_trial, batch * per_trial).reshape(batch, per_trial)
        data = (draws[:, :m] >> np.uint64(63)).astype(np.uint8)
        noise = ((draws[:, m:] >> np.uint64(11)) < np.uint64(threshold)).astype(np.uint8)
        received = encode_blocks(data, data_idx, n, k) ^ noise
        decoded, _ = decode_blocks(received, data_idx, k)
        failures += int(np.any(decoded != data, axis=1).sum())
    return failures


def codeword_weights(data_idx, n, k):
    m = data_idx.shape[0]
    values = np.arange(1 << m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    data = ((values[:, None] >> shifts) & 1).astype(np.uint8)
    return encode_blocks(data, data_idx, n, k).sum(axis=1, dtype=np.int64)
