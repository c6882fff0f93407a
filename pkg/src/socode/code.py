"""Binary linear codes given by generator matrices."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import kernels
from .gf2 import BitMatrix, extend_basis, mat_mul, nullspace, rank, row_basis, same_row_space

DEFAULT_MINDIST_LIMIT_K = 28


class DimensionLimitError(ValueError):
    """Raised when exhaustive enumeration would exceed the configured dimension."""


class LinearCode:
    """An [n, k] code spanned by the rows of ``generator``.

    The generator is kept exactly as given (no standard form): the column
    census used by the self-orthogonality tools depends on it. ``dimension``
    is the rank, so rank-deficient generators are fine.
    """

    def __init__(self, generator: BitMatrix, min_distance: int | None = None, name: str = ""):
        self.generator = generator
        self.name = name
        self._dimension: int | None = None
        self._min_distance = min_distance

    @classmethod
    def from_strings(cls, rows, name: str = "") -> "LinearCode":
        return cls(BitMatrix.from_strings(rows), name=name)

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        if self._dimension is None:
            self._dimension = rank(self.generator)
        return self._dimension

    @property
    def cached_min_distance(self) -> int | None:
        return self._min_distance

    def basis(self) -> BitMatrix:
        return row_basis(self.generator)

    def min_distance(self, limit_k: int = DEFAULT_MINDIST_LIMIT_K) -> int:
        return min_distance(self, limit_k)

    def params(self) -> tuple[int, int, int | None]:
        return self.length, self.dimension, self._min_distance

    def same_code(self, other: "LinearCode") -> bool:
        return same_row_space(self.generator, other.generator)

    def __repr__(self) -> str:
        d = "?" if self._min_distance is None else self._min_distance
        label = f" {self.name!r}" if self.name else ""
        return f"LinearCode[{self.length},{self.dimension},{d}]{label}"


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(nullspace(code.generator), name=f"dual({code.name})" if code.name else "")


def weight_distribution(code: LinearCode, limit_k: int = DEFAULT_MINDIST_LIMIT_K) -> np.ndarray:
    """Counts A_0..A_n of codeword weights, by full enumeration of the row space."""
    basis = code.basis()
    if basis.rows > limit_k:
        raise DimensionLimitError(f"dimension {basis.rows} exceeds enumeration limit {limit_k}")
    if basis.rows == 0:
        hist = np.zeros(code.length + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    hist = kernels.weight_histogram(np.array(basis.words), code.length, 0)
    hist[0] += 1
    return hist


def min_distance(code: LinearCode, limit_k: int = DEFAULT_MINDIST_LIMIT_K) -> int:
    """Exact minimum nonzero weight; the result is cached on ``code``."""
    if code.cached_min_distance is not None:
        return code.cached_min_distance
    k = code.dimension
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    if k > limit_k:
        raise DimensionLimitError(f"dimension {k} exceeds enumeration limit {limit_k}")
    hist = weight_distribution(code, limit_k)
    d = int(np.flatnonzero(hist[1:])[0]) + 1
    code._min_distance = d
    return d


def min_weight_outside(outer: BitMatrix, inner: BitMatrix, limit_k: int = DEFAULT_MINDIST_LIMIT_K) -> int | None:
    """Minimum weight of span(outer) minus span(inner), where span(inner) lies inside span(outer).

    Returns None when the difference is empty.
    """
    base = row_basis(inner) if inner.rows else BitMatrix.zeros(0, outer.cols)
    extra = extend_basis(base, outer)
    rows = base.vstack(extra) if base.rows else extra
    if rows.rows > limit_k:
        raise DimensionLimitError(f"dimension {rows.rows} exceeds enumeration limit {limit_k}")
    if extra.rows == 0:
        return None
    hist = kernels.weight_histogram(np.array(rows.words), outer.cols, base.rows)
    return int(np.flatnonzero(hist)[0])


def _check_positions(code: LinearCode, positions: Iterable[int]) -> list[int]:
    pos = sorted(set(int(p) for p in positions))
    bad = [p for p in pos if not 1 <= p <= code.length]
    if bad:
        raise IndexError(f"positions out of range 1..{code.length}: {bad}")
    return pos


def puncture(code: LinearCode, positions: Iterable[int]) -> LinearCode:
    """Delete the given 1-based columns."""
    pos = _check_positions(code, positions)
    if not pos:
        return LinearCode(code.generator, code.cached_min_distance, code.name)
    return LinearCode(code.generator.delete_columns(p - 1 for p in pos))


def shorten(code: LinearCode, positions: Iterable[int]) -> LinearCode:
    """Codewords vanishing on the given 1-based columns, with those columns removed."""
    pos = _check_positions(code, positions)
    if not pos:
        return LinearCode(code.generator, code.cached_min_distance, code.name)
    g = code.generator
    # messages x with x . G[:, pos] = 0
    msgs = nullspace(g.take_columns(p - 1 for p in pos).transpose())
    if msgs.rows == 0:
        return LinearCode(BitMatrix.zeros(0, code.length - len(pos)))
    kept = mat_mul(msgs, g)
    return LinearCode(kept.delete_columns(p - 1 for p in pos))


def griesmer_upper(n: int, k: int) -> int:
    """Largest d with sum_{i<k} ceil(d / 2^i) <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

    def length_needed(d: int) -> int:
        return sum(-(-d // (1 << i)) for i in range(k))

    d = 1
    while length_needed(d + 1) <= n:
        d += 1
    return d


def is_self_orthogonal_oracle(code: LinearCode | BitMatrix) -> bool:
    """G G^T == 0: every pair of generator rows, and each row with itself, is orthogonal."""
    g = code.generator if isinstance(code, LinearCode) else code
    if g.rows == 0:
        return True
    return mat_mul(g, g.transpose()).is_zero()
