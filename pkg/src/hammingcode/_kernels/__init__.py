"""Backend selection for the batch kernels.

The numba backend is used when numba imports cleanly, unless the environment
variable ``HAMMINGCODE_DISABLE_NUMBA`` is set to a non-empty value other than
``0``. Both backends implement the same functions with identical results:

``group_syndromes(words, k)``
    checking number of every row of a ``(N, n)`` uint8 array.
``encode_blocks(data, data_idx, n, k)``
    codewords for a ``(N, m)`` array of data rows.
``decode_blocks(words, data_idx, k)``
    ``(data, syndromes)`` after single-error correction.
``splitmix64(seed, start, count)``
    draws ``start .. start + count - 1`` of the SplitMix64 stream for ``seed``.
``bsc_mask(seed, start, rows, cols, threshold)``
    flip mask; entry is 1 iff ``draw >> 11 < threshold``.
``count_block_failures(data_idx, n, k, threshold, seed, trials)``
    number of BSC trials whose decoded data differ from the sent data.
``codeword_weights(data_idx, n, k)``
    Hamming weight of the codeword for every data integer ``0 .. 2**m - 1``.
"""

import os
from types import ModuleType

from . import _numpy

BACKENDS: dict[str, ModuleType] = {"numpy": _numpy}

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None
else:
    BACKENDS["numba"] = _numba


def _pick() -> ModuleType:
    flag = os.environ.get("HAMMINGCODE_DISABLE_NUMBA", "")
    if flag not in ("", "0") or _numba is None:
        return _numpy
    return _numba


backend = _pick()
BACKEND_NAME = "numba" if backend is _numba else "numpy"

group_syndromes = backend.group_syndromes
encode_blocks = backend.encode_blocks
decode_blocks = backend.decode_blocks
splitmix64 = backend.splitmix64
bsc_mask = backend.bsc_mask
count_block_failures = backend.count_block_failures
codeword_weights = backend.codeword_weights
