"""Column census l(G) and the self-orthogonality tests built on it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import BitMatrix, BitVector, mat_mul
from .reed_muller import so_matrix


@dataclass(frozen=True)
class EllVector:
    """Column census of a k-row matrix.

    ``counts[i - 1]`` is how many columns equal h_i (i in binary, row 1 the
    MSB); ``parity`` is the same mod 2. All-zero columns are tallied apart.
    """

    k: int
    counts: tuple[int, ...]
    parity: BitVector
    zero_columns: int

    @property
    def n(self) -> int:
        return sum(self.counts) + self.zero_columns


@dataclass(frozen=True)
class Syndrome:
    k: int
    bits: BitVector

    def to_int(self) -> int:
        return self.bits.to_int()

    def is_zero(self) -> bool:
        return not self.bits

    def __str__(self) -> str:
        return str(self.bits)


def _rows_of(g: BitMatrix) -> int:
    if g.rows < 1 or g.rows > 16:
        raise ValueError(f"need 1 <= k <= 16 rows, got {g.rows}")
    return g.rows


def ell_vector(g: BitMatrix) -> EllVector:
    k = _rows_of(g)
    types = g.column_ints()
    tally = np.bincount(types, minlength=1 << k)
    counts = tuple(int(c) for c in tally[1:])
    parity = BitVector.from_bits(c & 1 for c in counts)
    return EllVector(k, counts, parity, int(tally[0]))


def syndrome(g: BitMatrix) -> Syndrome:
    """SO_k times the parity of l(G), in SO_k row order."""
    ell = ell_vector(g)
    so = so_matrix(ell.k).matrix
    col = BitMatrix.from_vectors([ell.parity]).transpose()
    bits = mat_mul(so, col).transpose().row(0)
    return Syndrome(ell.k, bits)


def so_check(g: BitMatrix) -> bool:
    return syndrome(g).is_zero()


def ij_pair_counts(g: BitMatrix) -> dict[tuple[int, int], int]:
    """|I(j) ∩ I(j')| for 1 <= j <= j' <= k, taken literally from the multiset definition.

    A column equal to h_t lies in I(j) when floor(t / 2^(j-1)) is odd, i.e.
    bit j-1 of t counting from the least significant end.
    """
    k = g.rows
    types = [int(t) for t in g.column_ints()]
    members = {j: [t for t in types if t and (t // 2 ** (j - 1)) % 2 == 1] for j in range(1, k + 1)}
    out = {}
    for j in range(1, k + 1):
        for jj in range(j, k + 1):
            # multiset intersection of the two column lists
            out[(j, jj)] = sum(1 for t in members[j] if (t // 2 ** (jj - 1)) % 2 == 1)
    return out


def ij_multiset_oracle(g: BitMatrix) -> bool:
    return all(v % 2 == 0 for v in ij_pair_counts(g).values())
