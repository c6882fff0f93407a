"""Simplex matrices H_k, Reed-Muller generators and the self-orthogonality matrix SO_k."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .gf2 import BitMatrix


@dataclass(frozen=True)
class SimplexMatrix:
    """k x (2^k - 1) matrix whose column j is j in binary, MSB in row 1."""

    k: int
    matrix: BitMatrix


@dataclass(frozen=True)
class SOMatrix:
    """Rows r_i * r_j of H_k for i <= j: the k diagonal products, then i < j lexicographically.

    ``pairs`` holds the 1-based (i, j) label of every row.
    """

    k: int
    matrix: BitMatrix
    pairs: tuple[tuple[int, int], ...]

    def column_syndromes(self) -> np.ndarray:
        """Entry i (1..2^k-1) is column i read MSB-first in row order; entry 0 is 0."""
        return _column_syndromes(self.k)


def _simplex_bits(k: int) -> np.ndarray:
    t = np.arange(1, 1 << k, dtype=np.int64)
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    return ((t[None, :] >> shifts[:, None]) & 1).astype(np.uint8)


def simplex_matrix(k: int) -> SimplexMatrix:
    if not 2 <= k <= 16:
        raise ValueError(f"simplex_matrix needs 2 <= k <= 16, got {k}")
    return SimplexMatrix(k, BitMatrix.from_array(_simplex_bits(k)))


def so_pairs(k: int) -> tuple[tuple[int, int], ...]:
    diag = [(i, i) for i in range(1, k + 1)]
    off = list(combinations(range(1, k + 1), 2))
    return tuple(diag + off)


@lru_cache(maxsize=None)
def so_matrix(k: int) -> SOMatrix:
    if not 2 <= k <= 10:
        raise ValueError(f"so_matrix needs 2 <= k <= 10, got {k}")
    h = _simplex_bits(k)
    pairs = so_pairs(k)
    rows = np.array([h[i - 1] & h[j - 1] for i, j in pairs], dtype=np.uint8)
    return SOMatrix(k, BitMatrix.from_array(rows), pairs)


@lru_cache(maxsize=None)
def _column_syndromes(k: int) -> np.ndarray:
    bits = so_matrix(k).matrix.to_array().astype(np.int64)
    m = bits.shape[0]
    place = np.left_shift(np.int64(1), np.arange(m - 1, -1, -1, dtype=np.int64))
    out = np.zeros(1 << k, dtype=np.int64)
    out[1:] = place @ bits
    out.flags.writeable = False
    return out


def rm_monomials(r: int, m: int) -> list[tuple[int, ...]]:
    """Variable sets (1-based) of the monomials of degree <= r, by degree then lexicographically."""
    return [s for deg in range(r + 1) for s in combinations(range(1, m + 1), deg)]


def rm_generator(r: int, m: int) -> BitMatrix:
    """Evaluation vectors of all monomials of degree <= r in m variables.

    Column t+1 is the point whose coordinates are the bits of t, with x_1 the
    most significant bit; so the all-zeros point is coordinate 1.
    """
    if not (0 <= r <= m and 1 <= m <= 16):
        raise ValueError(f"rm_generator needs 0 <= r <= m <= 16, m >= 1; got r={r}, m={m}")
    t = np.arange(1 << m, dtype=np.int64)
    x = ((t[None, :] >> np.arange(m - 1, -1, -1)[:, None]) & 1).astype(np.uint8)
    rows = []
    for mono in rm_monomials(r, m):
        v = np.ones(1 << m, dtype=np.uint8)
        for var in mono:
            v &= x[var - 1]
        rows.append(v)
    return BitMatrix.from_array(np.array(rows))
