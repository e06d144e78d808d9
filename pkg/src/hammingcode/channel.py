"""Error injection and brute-force verification of code properties.

Randomness comes from SplitMix64, chosen because its output is defined by a
short recurrence that any language can reproduce bit for bit::

    state  <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2**64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2**64)
    output <- z ^ (z >> 31)

The initial state is the 64-bit seed. A bit passes through the binary
symmetric channel flipped iff ``output >> 11 < ceil(p_e * 2**53)``, one draw
per bit, bits taken in transmission order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from . import _kernels
from .codec import decode_many, encode_many
from .errors import InvalidInputError, PositionRangeError, ResourceLimitError
from .params import BitBlock, BitsLike, CodeParams

__all__ = [
    "BSC",
    "AnalysisReport",
    "ChannelConfig",
    "FlipPosition",
    "MAX_COVERAGE_M",
    "MAX_ENUMERATION_M",
    "SplitMix64",
    "analyze",
    "block_error_rate_sim",
    "bsc_threshold",
    "exhaustive_correction_check",
    "inject",
    "min_distance_bruteforce",
    "weight_distribution",
]

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

# Size guards for exhaustive enumeration; pass force=True to exceed them.
MAX_ENUMERATION_M = 20
MAX_COVERAGE_M = 16


class SplitMix64:
    """SplitMix64 stream positioned ``position`` draws after ``seed``."""

    def __init__(self, seed: int, position: int = 0) -> None:
        if not 0 <= seed <= MASK64:
            raise InvalidInputError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.position = position

    @property
    def state(self) -> int:
        return (self.seed + self.position * GAMMA) & MASK64

    def next_u64(self) -> int:
        self.position += 1
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def take(self, count: int) -> np.ndarray:
        """The next ``count`` draws as a uint64 array."""
        out = _kernels.splitmix64(self.seed, self.position, count)
        self.position += count
        return out

    def bsc_mask(self, rows: int, cols: int, p_e: float) -> np.ndarray:
        """``(rows, cols)`` uint8 flip mask, consuming ``rows * cols`` draws."""
        out = _kernels.bsc_mask(self.seed, self.position, rows, cols, bsc_threshold(p_e))
        self.position += rows * cols
        return out


def bsc_threshold(p_e: float) -> int:
    if not 0.0 <= p_e <= 1.0:
        raise InvalidInputError(f"crossover probability must lie in [0, 1], got {p_e}")
    return math.ceil(p_e * 2**53)


@dataclass(frozen=True)
class FlipPosition:
    position: int


@dataclass(frozen=True)
class BSC:
    p_e: float

    def __post_init__(self) -> None:
        bsc_threshold(self.p_e)


@dataclass(frozen=True)
class ChannelConfig:
    mode: Union[FlipPosition, BSC]
    seed: int = 0


def inject(
    codeword: BitsLike, config: ChannelConfig, rng: Optional[SplitMix64] = None
) -> tuple[BitBlock, frozenset[int]]:
    """Pass ``codeword`` through the channel; returns the result and the flipped positions.

    ``rng`` defaults to a fresh stream seeded with ``config.seed``; pass one
    explicitly to continue a stream across blocks.
    """
    block = BitBlock.coerce(codeword)
    mode = config.mode
    if isinstance(mode, FlipPosition):
        if not 1 <= mode.position <= len(block):
            raise PositionRangeError(f"position {mode.position} outside 1..{len(block)}")
        return block.flipped(mode.position), frozenset({mode.position})
    if rng is None:
        rng = SplitMix64(config.seed)
    mask = rng.bsc_mask(1, len(block), mode.p_e)[0]
    flipped = frozenset(int(c) + 1 for c in np.flatnonzero(mask))
    return block.flipped(*sorted(flipped)), flipped


def _guard(params: CodeParams, limit: int, force: bool) -> None:
    if params.m > limit and not force:
        raise ResourceLimitError(
            f"m={params.m} exceeds the enumeration limit m <= {limit}; pass force=True"
        )


def _all_data(m: int) -> np.ndarray:
    values = np.arange(1 << m, dtype=np.int64)
    return ((values[:, None] >> np.arange(m - 1, -1, -1)) & 1).astype(np.uint8)


def weight_distribution(params: CodeParams, force: bool = False) -> dict[int, int]:
    _guard(params, MAX_ENUMERATION_M, force)
    weights = _kernels.codeword_weights(params.data_index_array, params.n, params.k)
    counts = np.bincount(weights, minlength=params.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def min_distance_bruteforce(params: CodeParams, force: bool = False) -> int:
    """Smallest weight of a nonzero codeword, which for a linear code is its minimum distance."""
    return min(w for w in weight_distribution(params, force) if w > 0)


def exhaustive_correction_check(params: CodeParams, force: bool = False) -> float:
    """Fraction of (data block, single flip) pairs decoded back to the right data and position."""
    _guard(params, MAX_COVERAGE_M, force)
    data = _all_data(params.m)
    codewords = encode_many(data, params)
    good = 0
    for p in range(1, params.n + 1):
        received = codewords.copy()
        received[:, p - 1] ^= 1
        decoded, checking = decode_many(received, params)
        ok = (checking == p) & np.all(decoded == data, axis=1)
        good += int(ok.sum())
    return good / (len(data) * params.n)


def block_error_rate_sim(params: CodeParams, p_e: float, trials: int, seed: int = 0) -> float:
    """Monte-Carlo probability that a block sent over BSC(p_e) decodes to wrong data.

    Each trial draws ``m`` data bits (top bit of a draw) and then ``n`` noise
    decisions from one SplitMix64 stream, so a seed fixes the estimate exactly.
    """
    if trials < 1:
        raise InvalidInputError(f"need at least one trial, got {trials}")
    failures = _kernels.count_block_failures(
        params.data_index_array, params.n, params.k, bsc_threshold(p_e), seed, trials
    )
    return failures / trials


@dataclass(frozen=True)
class AnalysisReport:
    params: CodeParams
    min_distance: int
    weight_distribution: dict[int, int]
    correction_coverage: float

    @property
    def rate(self) -> Fraction:
        return self.params.rate

    def to_text(self) -> str:
        """Flat ``key: value`` lines."""
        dist = " ".join(f"{w}:{c}" for w, c in sorted(self.weight_distribution.items()))
        lines = [
            f"n: {self.params.n}",
            f"m: {self.params.m}",
            f"k: {self.params.k}",
            f"rate: {self.rate.numerator}/{self.rate.denominator}",
            f"rate_decimal: {float(self.rate):.6f}",
            f"min_distance: {self.min_distance}",
            f"weight_distribution: {dist}",
            f"correction_coverage: {self.correction_coverage!r}",
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> AnalysisReport:
        fields = {}
        for line in text.splitlines():
            key, sep, value = line.partition(":")
            if sep and value.strip():
                fields.setdefault(key.strip(), value.strip())
        try:
            params = CodeParams(int(fields["m"]), int(fields["k"]))
            dist = dict(
                (int(w), int(c)) for w, c in (item.split(":") for item in fields["weight_distribution"].split())
            )
            return cls(params, int(fields["min_distance"]), dist, float(fields["correction_coverage"]))
        except (KeyError, ValueError) as exc:
            raise InvalidInputError(f"malformed analysis report: {exc}") from exc


def analyze(params: CodeParams, force: bool = False) -> AnalysisReport:
    _guard(params, MAX_COVERAGE_M, force)
    dist = weight_distribution(params, force)
    return AnalysisReport(
        params=params,
        min_distance=min(w for w in dist if w > 0),
        weight_distribution=dist,
        correction_coverage=exhaustive_correction_check(params, force),
    )
