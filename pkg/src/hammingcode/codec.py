"""Encoding and decoding of single blocks, plus array-at-a-time batch variants.

The single-block functions evaluate each partial parity check directly over
its member positions and are meant to be read alongside the construction:

* encoding fixes check bit ``x_{2^i}`` so that the sum over ``check_mask(i, n)``
  is 0 mod 2;
* decoding evaluates the same sums on the received word; sum ``i`` is bit
  ``i`` of the checking number, assembled from the least significant bit up.
  A nonzero checking number ``c <= n`` is the position of the flipped bit.

For shortened codes (``n < 2**k - 1``) a checking number above ``n`` cannot
come from a single error. The decoder reports it as ``UNCORRECTABLE`` rather
than guessing; with two or more errors a decoder may also silently
miscorrect, which is outside the single-error contract.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import InvalidInputError
from .params import BitBlock, BitsLike, CodeParams, check_mask

__all__ = [
    "CheckingNumber",
    "DecodeOutcome",
    "Status",
    "checking_numbers",
    "compute_checking_number",
    "decode",
    "decode_many",
    "encode",
    "encode_many",
    "extract_data",
]


class Status(enum.Enum):
    CLEAN = "clean"
    CORRECTED = "corrected"
    UNCORRECTABLE = "uncorrectable"


@dataclass(frozen=True)
class CheckingNumber:
    """Outcome of the k partial parity checks on a received word.

    ``bits[i]`` is the parity of group ``i`` (``s_{i+1}``), so
    ``value == sum(bits[i] << i)``.
    """

    value: int
    bits: tuple[int, ...]

    @classmethod
    def from_bits(cls, bits: tuple[int, ...]) -> CheckingNumber:
        value = 0
        for i, s in enumerate(bits):
            value |= s << i
        return cls(value, tuple(bits))

    def __int__(self) -> int:
        return self.value

    def binary(self) -> str:
        """The k bits written most significant first, e.g. ``'101'``."""
        return "".join(str(s) for s in reversed(self.bits))


@dataclass(frozen=True)
class DecodeOutcome:
    data: BitBlock
    corrected_position: Optional[int]
    status: Status
    checking_number: int = 0


def _block(value: BitsLike, length: int, what: str) -> BitBlock:
    block = BitBlock.coerce(value)
    if len(block) != length:
        raise InvalidInputError(f"{what} must have {length} bits, got {len(block)}")
    return block


def encode(data: BitsLike, params: CodeParams) -> BitBlock:
    """Codeword for ``m`` data bits.

    >>> str(encode("1011", CodeParams(4, 3)))
    '0110011'
    """
    data = _block(data, params.m, "data block")
    x = [0] * (params.n + 1)  # x[p] is position p; x[0] unused
    for p, b in zip(params.data_positions, data):
        x[p] = b
    for i in range(params.k):
        check = 1 << i
        x[check] = sum(x[p] for p in check_mask(i, params.n) if p != check) % 2
    return BitBlock(tuple(x[1:]))


def compute_checking_number(received: BitsLike, params: CodeParams) -> CheckingNumber:
    received = _block(received, params.n, "received word")
    bits = tuple(
        sum(received.bit(p) for p in check_mask(i, params.n)) % 2 for i in range(params.k)
    )
    return CheckingNumber.from_bits(bits)


def extract_data(codeword: BitsLike, params: CodeParams) -> BitBlock:
    codeword = _block(codeword, params.n, "codeword")
    return BitBlock(tuple(codeword.bit(p) for p in params.data_positions))


def decode(received: BitsLike, params: CodeParams) -> DecodeOutcome:
    received = _block(received, params.n, "received word")
    c = compute_checking_number(received, params).value
    if c == 0:
        return DecodeOutcome(extract_data(received, params), None, Status.CLEAN, 0)
    if c > params.n:
        return DecodeOutcome(extract_data(received, params), None, Status.UNCORRECTABLE, c)
    fixed = received.flipped(c)
    return DecodeOutcome(extract_data(fixed, params), c, Status.CORRECTED, c)


def _rows(arr: np.ndarray, width: int, what: str) -> np.ndarray:
    arr = np.asarray(arr)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise InvalidInputError(f"{what} must have shape (N, {width}), got {arr.shape}")
    if arr.size and (arr.max() > 1 or arr.min() < 0):
        raise InvalidInputError(f"{what} may only contain 0 and 1")
    return np.ascontiguousarray(arr, dtype=np.uint8)


def encode_many(data: np.ndarray, params: CodeParams) -> np.ndarray:
    """Encode every row of an ``(N, m)`` 0/1 array; returns ``(N, n)`` uint8."""
    data = _rows(data, params.m, "data")
    return _kernels.encode_blocks(data, params.data_index_array, params.n, params.k)


def checking_numbers(words: np.ndarray, params: CodeParams) -> np.ndarray:
    words = _rows(words, params.n, "words")
    return _kernels.group_syndromes(words, params.k)


def decode_many(words: np.ndarray, params: CodeParams) -> tuple[np.ndarray, np.ndarray]:
    """Decode every row of an ``(N, n)`` array.

    Returns ``(data, checking)``: the ``(N, m)`` corrected data and the int64
    checking number of each row. Rows with ``checking > n`` are uncorrectable
    and their data is extracted without correction.
    """
    words = _rows(words, params.n, "words")
    return _kernels.decode_blocks(words, params.data_index_array, params.k)
