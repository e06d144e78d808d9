"""Framing of byte payloads into coded streams.

Layout (all integers little-endian)::

    offset  size  field
    0       4     magic b"HMNG"
    4       1     version (1)
    5       2     m, data bits per block
    7       1     k, check bits per block
    8       8     payload_bit_length (multiple of 8)
    16      ...   codewords, n bits each, packed back to back

Payload bytes are split into bits most significant bit first and cut into
blocks of ``m``; the last block is zero-padded. Codewords are packed MSB
first, position 1 of block 0 being the top bit of byte 16, and the final byte
is zero-padded. The body holds exactly ``ceil(blocks * n / 8)`` bytes with
``blocks = ceil(payload_bit_length / m)``.
"""

from __future__ import annotations

import struct
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .codec import Status, decode_many, encode_many
from .errors import FormatError, InvalidParameterError
from .params import CodeParams

__all__ = [
    "FrameHeader",
    "HEADER_SIZE",
    "MAGIC",
    "StreamReport",
    "VERSION",
    "decode_stream",
    "encode_stream",
    "pack_stream",
    "unpack_stream",
]

MAGIC = b"HMNG"
VERSION = 1
_HEADER = struct.Struct("<4sBHBQ")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class FrameHeader:
    m: int
    k: int
    payload_bit_length: int
    version: int = VERSION
    magic: bytes = MAGIC

    @classmethod
    def for_payload(cls, params: CodeParams, payload_len: int) -> FrameHeader:
        return cls(params.m, params.k, 8 * payload_len)

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.m, self.k)

    @property
    def block_count(self) -> int:
        return -(-self.payload_bit_length // self.m)

    @property
    def body_size(self) -> int:
        return -(-self.block_count * (self.m + self.k) // 8)

    def pack(self) -> bytes:
        return _HEADER.pack(self.magic, self.version, self.m, self.k, self.payload_bit_length)

    @classmethod
    def unpack(cls, data: bytes) -> FrameHeader:
        if len(data) < HEADER_SIZE:
            raise FormatError(f"truncated header: {len(data)} of {HEADER_SIZE} bytes")
        magic, version, m, k, bit_len = _HEADER.unpack_from(data)
        if magic != MAGIC:
            raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
        if version != VERSION:
            raise FormatError(f"unsupported version {version}, expected {VERSION}")
        if bit_len % 8:
            raise FormatError(f"payload_bit_length {bit_len} is not a whole number of bytes")
        try:
            CodeParams(m, k)
        except InvalidParameterError as exc:
            raise FormatError(f"invalid code parameters in header: {exc}") from exc
        return cls(m, k, bit_len, version, magic)


def pack_stream(header: FrameHeader, words: np.ndarray) -> bytes:
    """Serialize a header and its ``(blocks, n)`` codeword array."""
    return header.pack() + np.packbits(words.reshape(-1)).tobytes()


def unpack_stream(coded: bytes) -> tuple[FrameHeader, np.ndarray]:
    """Parse a coded stream into its header and a ``(blocks, n)`` uint8 codeword array."""
    header = FrameHeader.unpack(coded)
    body = coded[HEADER_SIZE:]
    if len(body) < header.body_size:
        raise FormatError(
            f"truncated stream: {header.block_count} blocks need {header.body_size} bytes, "
            f"got {len(body)}"
        )
    if len(body) > header.body_size:
        raise FormatError(f"{len(body) - header.body_size} unexpected trailing bytes")
    n = header.m + header.k
    bits = np.unpackbits(np.frombuffer(body, dtype=np.uint8))
    return header, bits[: header.block_count * n].reshape(header.block_count, n)


def encode_stream(payload: bytes, params: CodeParams) -> bytes:
    header = FrameHeader.for_payload(params, len(payload))
    bits = np.unpackbits(np.frombuffer(bytes(payload), dtype=np.uint8))
    data = np.zeros(header.block_count * params.m, dtype=np.uint8)
    data[: bits.size] = bits
    words = encode_many(data.reshape(header.block_count, params.m), params)
    return pack_stream(header, words)


@dataclass(frozen=True)
class StreamReport:
    """Per-block decoding verdicts for one coded stream."""

    params: CodeParams
    checking: np.ndarray

    @property
    def block_count(self) -> int:
        return len(self.checking)

    @property
    def corrected_blocks(self) -> np.ndarray:
        return np.flatnonzero((self.checking >= 1) & (self.checking <= self.params.n))

    @property
    def uncorrectable_blocks(self) -> np.ndarray:
        return np.flatnonzero(self.checking > self.params.n)

    @property
    def corrected_count(self) -> int:
        return len(self.corrected_blocks)

    @property
    def uncorrectable_count(self) -> int:
        return len(self.uncorrectable_blocks)

    @property
    def degraded(self) -> bool:
        return self.uncorrectable_count > 0

    def status(self, block: int) -> Status:
        c = int(self.checking[block])
        if c == 0:
            return Status.CLEAN
        return Status.CORRECTED if c <= self.params.n else Status.UNCORRECTABLE

    def events(self) -> Iterator[tuple[int, Status, int]]:
        """``(block, status, checking_number)`` for every block that was not clean."""
        for b in np.flatnonzero(self.checking):
            yield int(b), self.status(int(b)), int(self.checking[b])

    def summary(self) -> str:
        return (
            f"{self.block_count} blocks, {self.corrected_count} corrected, "
            f"{self.uncorrectable_count} uncorrectable"
        )


def decode_stream(coded: bytes) -> tuple[bytes, StreamReport]:
    """Recover the payload, correcting up to one flipped bit per block.

    Uncorrectable blocks do not raise: their data bits are kept uncorrected
    and the report's ``degraded`` flag is set.
    """
    header, words = unpack_stream(coded)
    params = header.params
    data, checking = decode_many(words, params)
    bits = data.reshape(-1)[: header.payload_bit_length]
    return np.packbits(bits).tobytes(), StreamReport(params, checking)
