"""Code parameters, bit blocks and the position layout of an interleaved Hamming code.

Positions are 1-indexed everywhere in the public API: position ``p`` is the
``p``-th transmitted bit. Check bits sit at the powers of two
``1, 2, 4, ..., 2**(k-1)``; data bits fill the remaining positions in
increasing order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

import numpy as np

from .errors import InvalidInputError, InvalidParameterError, PositionRangeError

__all__ = [
    "BitBlock",
    "Check",
    "CodeParams",
    "Data",
    "PositionClass",
    "check_mask",
    "classify_position",
    "derive_params",
    "overall_parity",
]


@dataclass(frozen=True)
class CodeParams:
    """The triple ``(m, k, n)`` identifying a single-error-correcting code.

    ``m`` information bits, ``k`` check bits, block length ``n = m + k``.
    Valid iff ``m >= 1``, ``k >= 2``, ``2**k - 1 >= n`` and the last check
    position ``2**(k-1)`` fits in the block (``n >= 2**(k-1)``). Codes with
    ``n < 2**k - 1`` are shortened codes and are fully supported.
    """

    m: int
    k: int
    n: int = field(init=False)

    def __post_init__(self) -> None:
        m, k = self.m, self.k
        if isinstance(m, bool) or isinstance(k, bool):
            raise InvalidParameterError("m and k must be integers")
        if int(m) != m or int(k) != k:
            raise InvalidParameterError(f"m and k must be integers, got m={m!r}, k={k!r}")
        m, k = int(m), int(k)
        if m < 1:
            raise InvalidParameterError(f"need at least one information bit, got m={m}")
        if k < 2:
            raise InvalidParameterError(f"need at least two check bits, got k={k}")
        if (1 << k) - 1 < m + k:
            raise InvalidParameterError(
                f"{k} check bits cannot address {m + k} positions (2**k - 1 = {(1 << k) - 1})"
            )
        if 1 << (k - 1) > m + k:
            raise InvalidParameterError(
                f"check position {1 << (k - 1)} lies beyond block length {m + k}"
            )
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", m + k)

    def __str__(self) -> str:
        return f"({self.n},{self.m})"

    @property
    def rate(self) -> Fraction:
        return Fraction(self.m, self.n)

    @property
    def is_perfect(self) -> bool:
        """True when every nonzero k-bit checking number names a position."""
        return self.n == (1 << self.k) - 1

    @cached_property
    def check_positions(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.k))

    @cached_property
    def data_positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.n + 1) if p & (p - 1))

    @cached_property
    def data_index_array(self) -> np.ndarray:
        """0-based column indices of the data positions (internal use)."""
        arr = np.array(self.data_positions, dtype=np.int64) - 1
        arr.setflags(write=False)
        return arr


def derive_params(m: int) -> CodeParams:
    """Return the code with ``m`` data bits and the fewest check bits.

    >>> derive_params(4)
    CodeParams(m=4, k=3, n=7)
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise InvalidParameterError(f"need at least one information bit, got m={m!r}")
    m = int(m)
    k = 2
    while (1 << k) - 1 < m + k:
        k += 1
    return CodeParams(m, k)


@dataclass(frozen=True)
class Check:
    """Position ``2**group`` holding the check bit of parity group ``group``."""

    group: int


@dataclass(frozen=True)
class Data:
    """The ``index``-th data position (1-based, counted in increasing position order)."""

    index: int


PositionClass = Union[Check, Data]


def _require_position(p: int, n: int) -> int:
    if isinstance(p, bool) or int(p) != p or not 1 <= p <= n:
        raise PositionRangeError(f"position {p!r} outside 1..{n}")
    return int(p)


def classify_position(p: int, params: CodeParams) -> PositionClass:
    p = _require_position(p, params.n)
    if p & (p - 1) == 0:
        return Check(p.bit_length() - 1)
    # non-powers of two in 1..p: p minus the bit_length(p) powers of two in 1..p
    return Data(p - p.bit_length())


def check_mask(i: int, n: int) -> frozenset[int]:
    """Positions ``1..n`` whose binary representation has bit ``i`` set.

    These are the members of the ``i``-th partial parity check; ``2**i`` is
    always the smallest one.
    """
    if i < 0 or (1 << i) > n:
        raise PositionRangeError(f"group {i} has no check position within 1..{n}")
    return frozenset(p for p in range(1 << i, n + 1) if (p >> i) & 1)


BitsLike = Union["BitBlock", str, Iterable[int], np.ndarray]


@dataclass(frozen=True)
class BitBlock:
    """Immutable sequence of binary digits with 1-indexed positions.

    ``str(block)`` gives the bits left to right, position 1 first.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise InvalidInputError("bit blocks may only contain 0 and 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> BitBlock:
        text = text.strip()
        if set(text) - {"0", "1"}:
            raise InvalidInputError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def coerce(cls, value: BitsLike) -> BitBlock:
        if isinstance(value, BitBlock):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, np.ndarray):
            if value.ndim != 1:
                raise InvalidInputError(f"expected a 1-D bit array, got shape {value.shape}")
            return cls(tuple(value.tolist()))
        return cls(tuple(value))

    @classmethod
    def zeros(cls, length: int) -> BitBlock:
        return cls((0,) * length)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __xor__(self, other: BitBlock) -> BitBlock:
        other = BitBlock.coerce(other)
        if len(other) != len(self):
            raise InvalidInputError(f"length mismatch: {len(self)} vs {len(other)}")
        return BitBlock(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def bit(self, p: int) -> int:
        """Bit at 1-indexed position ``p``."""
        return self.bits[_require_position(p, len(self.bits)) - 1]

    def flipped(self, *positions: int) -> BitBlock:
        """Copy with the bits at the given 1-indexed positions inverted."""
        bits = list(self.bits)
        for p in positions:
            bits[_require_position(p, len(bits)) - 1] ^= 1
        return BitBlock(tuple(bits))

    def weight(self) -> int:
        return sum(self.bits)

    def to_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)


def overall_parity(block: BitsLike) -> int:
    """Simple parity: the number of ones modulo 2."""
    return BitBlock.coerce(block).weight() % 2
