"""Parity-check and generator matrices over GF(2).

Two presentations of the same code are built here:

* the interleaved parity-check matrix, whose column ``p`` is the binary
  representation of ``p`` with row 0 as the least significant bit, so that
  ``H @ r`` read as a binary number is the checking number of ``r``;
* the systematic form ``[A | I_k]``, obtained by moving the check columns
  ``1, 2, 4, ...`` behind the data columns.

:func:`find_column_permutation` recovers the column reordering linking any two
matrices that differ only by column order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codec import encode_many
from .errors import InvalidInputError
from .params import CodeParams

__all__ = [
    "BinaryMatrix",
    "ColumnPermutation",
    "find_column_permutation",
    "generator_matrix",
    "parity_check_interleaved",
    "parity_check_systematic",
    "systematic_permutation",
]


class BinaryMatrix:
    """Dense 0/1 matrix; products are taken mod 2.

    Wraps a read-only ``uint8`` array available as :attr:`array`.
    """

    __slots__ = ("_a",)

    def __init__(self, entries) -> None:
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise InvalidInputError(f"matrix must be 2-D, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() > 1):
            raise InvalidInputError("matrix entries must be 0 or 1")
        a = a.astype(np.uint8)
        a.setflags(write=False)
        self._a = a

    @classmethod
    def from_grid(cls, text: str) -> BinaryMatrix:
        rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if any(set(r) - {"0", "1"} for r in rows):
            raise InvalidInputError("grid rows may only contain 0 and 1")
        return cls([[int(c) for c in r] for r in rows])

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat tuple of all entries."""
        return tuple(self._a.ravel().tolist())

    @property
    def T(self) -> BinaryMatrix:
        return BinaryMatrix(self._a.T)

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (1-indexed)."""
        if not 1 <= j <= self.cols:
            raise InvalidInputError(f"column {j} outside 1..{self.cols}")
        return tuple(self._a[:, j - 1].tolist())

    def __matmul__(self, other):
        b = other.array if isinstance(other, BinaryMatrix) else np.asarray(other)
        prod = (self._a.astype(np.int64) @ b.astype(np.int64)) & 1
        return BinaryMatrix(prod) if prod.ndim == 2 else prod.astype(np.uint8)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self._a.tolist()!r})"

    def is_zero(self) -> bool:
        return not self._a.any()

    def permute_columns(self, perm: ColumnPermutation) -> BinaryMatrix:
        """Matrix whose column ``j`` is column ``perm.mapping[j-1]`` of this one."""
        if len(perm) != self.cols:
            raise InvalidInputError(f"permutation of {len(perm)} columns for {self.cols}")
        return BinaryMatrix(self._a[:, np.array(perm.mapping) - 1])

    def rank(self) -> int:
        """Rank over GF(2), by Gaussian elimination."""
        a = self._a.copy()
        rank = 0
        for col in range(a.shape[1]):
            pivots = np.flatnonzero(a[rank:, col]) + rank
            if pivots.size == 0:
                continue
            p = pivots[0]
            a[[rank, p]] = a[[p, rank]]
            others = np.flatnonzero(a[:, col])
            others = others[others != rank]
            a[others] ^= a[rank]
            rank += 1
            if rank == a.shape[0]:
                break
        return rank

    def to_grid(self) -> str:
        """Plain-text grid: one line of ``0``/``1`` characters per row."""
        return "\n".join("".join(map(str, row)) for row in self._a.tolist())


@dataclass(frozen=True)
class ColumnPermutation:
    """Bijection on ``1..cols``: target column ``j`` takes source column ``mapping[j-1]``."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(j) for j in self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(mapping)}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.mapping)) + ")"

    @property
    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.mapping, start=1))

    def inverse(self) -> ColumnPermutation:
        inv = [0] * len(self.mapping)
        for target, source in enumerate(self.mapping, start=1):
            inv[source - 1] = target
        return ColumnPermutation(tuple(inv))


def parity_check_interleaved(params: CodeParams) -> BinaryMatrix:
    positions = np.arange(1, params.n + 1)
    return BinaryMatrix([(positions >> i) & 1 for i in range(params.k)])


def generator_matrix(params: CodeParams) -> BinaryMatrix:
    """Row ``j`` is the codeword of the ``j``-th unit data block."""
    return BinaryMatrix(encode_many(np.eye(params.m, dtype=np.uint8), params))


def systematic_permutation(params: CodeParams) -> ColumnPermutation:
    """Data positions in order, then check positions ``1, 2, 4, ...``."""
    return ColumnPermutation(params.data_positions + params.check_positions)


def parity_check_systematic(params: CodeParams) -> BinaryMatrix:
    """The parity-check matrix in ``[A | I_k]`` form."""
    return parity_check_interleaved(params).permute_columns(systematic_permutation(params))


def find_column_permutation(h1: BinaryMatrix, h2: BinaryMatrix) -> Optional[ColumnPermutation]:
    """Permutation ``pi`` with ``h1.permute_columns(pi) == h2``, or ``None``.

    Repeated columns are matched in increasing index order, so the result is
    deterministic; it is the only solution when the columns of ``h1`` are
    distinct.
    """
    if h1.shape != h2.shape:
        raise InvalidInputError(f"shape mismatch: {h1.shape} vs {h2.shape}")
    available: dict[bytes, list[int]] = defaultdict(list)
    for j in range(h1.cols, 0, -1):
        available[h1.array[:, j - 1].tobytes()].append(j)
    mapping = []
    for j in range(h2.cols):
        candidates = available.get(h2.array[:, j].tobytes())
        if not candidates:
            return None
        mapping.append(candidates.pop())
    return ColumnPermutation(tuple(mapping))
