"""Bit-packed vectors and matrices over GF(2).

Values are immutable: the packed words are stored read-only and every
operation returns a new object. Internally indices are 0-based; functions
that take *positions* from users (puncture sets, leader supports) are
1-based and say so.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels

WORD_BITS = 64


def _nwords(ncols: int) -> int:
    return max(1, (ncols + WORD_BITS - 1) // WORD_BITS)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into ``(rows, words)`` uint64."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim != 2:
        raise ValueError("expected a 2-D array")
    rows, cols = bits.shape
    nw = _nwords(cols)
    padded = np.zeros((rows, nw * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits & 1
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, ncols: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    as_bytes = words.view(np.uint8).reshape(words.shape[0], words.shape[1] * 8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :ncols]


def _frozen(words: np.ndarray) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.uint64)
    words.flags.writeable = False
    return words


class BitVector:
    """A binary vector of fixed length."""

    __slots__ = ("_words", "length")

    def __init__(self, words: np.ndarray, length: int):
        self._words = _frozen(np.asarray(words, dtype=np.uint64).reshape(-1))
        self.length = int(length)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        arr = np.fromiter((int(b) & 1 for b in bits), dtype=np.uint8)
        return cls(pack_bits(arr[None, :])[0], arr.size)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        text = "".join(text.split())
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVector":
        """MSB-first: bit 1 of the vector is the highest bit of ``value``."""
        return cls.from_bits((value >> (length - 1 - i)) & 1 for i in range(length))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(np.zeros(_nwords(length), dtype=np.uint64), length)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def to_array(self) -> np.ndarray:
        return unpack_bits(self._words[None, :], self.length)[0]

    def to_int(self) -> int:
        """Read the vector as an MSB-first integer."""
        out = 0
        for b in self.to_array():
            out = (out << 1) | int(b)
        return out

    def weight(self) -> int:
        return int(kernels.row_weights(self._words))

    def support(self) -> list[int]:
        """1-based positions of the set bits."""
        return [int(i) + 1 for i in np.flatnonzero(self.to_array())]

    def dot(self, other: "BitVector") -> int:
        self._check(other)
        return int(kernels.row_weights(self._words & other._words)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self._words ^ other._words, self.length)

    def __bool__(self) -> bool:
        return bool(self._words.any())

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.length, self._words.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.to_array()))

    def __repr__(self) -> str:
        return f"BitVector('{self}')"

    def _check(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")


class BitMatrix:
    """Dense binary matrix with bit-packed rows."""

    __slots__ = ("_words", "rows", "cols")

    def __init__(self, words: np.ndarray, cols: int):
        words = np.asarray(words, dtype=np.uint64)
        if words.ndim != 2 or words.shape[1] != _nwords(cols):
            raise ValueError("packed words do not match column count")
        self._words = _frozen(words)
        self.rows = words.shape[0]
        self.cols = int(cols)

    # construction

    @classmethod
    def from_array(cls, bits) -> "BitMatrix":
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim == 1:
            arr = arr[None, :]
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        if arr.size and arr.max() > 1:
            raise ValueError("entries must be 0 or 1")
        return cls(pack_bits(arr), arr.shape[1])

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        cleaned = ["".join(r.split()) for r in rows]
        if not cleaned:
            raise ValueError("need at least one row")
        if len({len(r) for r in cleaned}) != 1:
            raise ValueError("rows have different lengths")
        for r in cleaned:
            if any(ch not in "01" for ch in r):
                raise ValueError(f"invalid character in row {r!r}")
        return cls.from_array([[int(ch) for ch in r] for r in cleaned])

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: int | None = None) -> "BitMatrix":
        if not vectors:
            if cols is None:
                raise ValueError("cannot infer column count from no vectors")
            return cls.zeros(0, cols)
        width = vectors[0].length
        if any(v.length != width for v in vectors):
            raise ValueError("vectors have different lengths")
        return cls(np.stack([v.words for v in vectors]), width)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, _nwords(cols)), dtype=np.uint64), cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_array(np.eye(n, dtype=np.uint8))

    # views

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def words(self) -> np.ndarray:
        return self._words

    def to_array(self) -> np.ndarray:
        return unpack_bits(self._words, self.cols)

    def to_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.to_array()]

    def row(self, i: int) -> BitVector:
        """Row ``i`` (0-based)."""
        return BitVector(self._words[i], self.cols)

    def column_ints(self) -> np.ndarray:
        """Each column read as an integer with row 1 as the most significant bit."""
        arr = self.to_array().astype(np.int64)
        weights = np.left_shift(np.int64(1), np.arange(self.rows - 1, -1, -1, dtype=np.int64))
        return weights @ arr if self.rows else np.zeros(self.cols, dtype=np.int64)

    def is_zero(self) -> bool:
        return not self._words.any()

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_array(self.to_array().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    # structural edits (all return new matrices)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.rows != self.rows:
            raise ValueError("row count mismatch")
        return BitMatrix.from_array(np.hstack([self.to_array(), other.to_array()]))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return BitMatrix(np.vstack([self._words, other._words]), self.cols)

    def delete_columns(self, idx: Iterable[int]) -> "BitMatrix":
        """Drop columns by 0-based index."""
        idx = sorted(set(int(i) for i in idx))
        return BitMatrix.from_array(np.delete(self.to_array(), idx, axis=1))

    def take_columns(self, idx: Iterable[int]) -> "BitMatrix":
        idx = [int(i) for i in idx]
        return BitMatrix.from_array(self.to_array()[:, idx].reshape(self.rows, len(idx)))

    def take_rows(self, idx: Iterable[int]) -> "BitMatrix":
        idx = [int(i) for i in idx]
        return BitMatrix(self._words[idx].reshape(len(idx), self._words.shape[1]), self.cols)

    def nonzero_rows(self) -> "BitMatrix":
        keep = np.flatnonzero(self._words.any(axis=1))
        return self.take_rows(keep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.shape, self._words.tobytes()))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form and 1-based pivot columns.

    The echelon matrix keeps the input's row count; rows below the rank are zero.
    """
    words, pivots = kernels.rref_packed(np.array(m.words), m.cols)
    return BitMatrix(words, m.cols), [int(p) + 1 for p in pivots]


def rank(m: BitMatrix) -> int:
    if m.rows == 0:
        return 0
    return len(rref(m)[1])


def row_basis(m: BitMatrix) -> BitMatrix:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    red, piv = rref(m)
    return red.take_rows(range(len(piv)))


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product mod 2; row i of the result is the XOR of the rows of b selected by row i of a."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    if a.rows == 0 or b.rows == 0:
        return BitMatrix.zeros(a.rows, b.cols)
    sel = a.to_array().astype(bool)
    out = np.zeros((a.rows, b.words.shape[1]), dtype=np.uint64)
    for j in range(b.rows):
        out[sel[:, j]] ^= b.words[j]
    return BitMatrix(out, b.cols)


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis (as rows) of ``{x : m x^T = 0}``."""
    red, piv = rref(m)
    n = m.cols
    piv0 = [p - 1 for p in piv]
    free = [c for c in range(n) if c not in set(piv0)]
    if not free:
        return BitMatrix.zeros(0, n)
    arr = red.to_array()[: len(piv0)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for r, f in enumerate(free):
        basis[r, f] = 1
        for i, p in enumerate(piv0):
            basis[r, p] = arr[i, f]
    return BitMatrix.from_array(basis)


def same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    """Row spaces equal, compared through canonical RREF bases."""
    if a.cols != b.cols:
        return False
    return row_basis(a) == row_basis(b)


def in_row_space(v: BitVector, m: BitMatrix) -> bool:
    return rank(m.vstack(BitMatrix.from_vectors([v]))) == rank(m)


def extend_basis(base: BitMatrix, extra: BitMatrix) -> BitMatrix:
    """Rows of ``extra`` (in order) that are independent of ``base`` and of each other."""
    picked: list[int] = []
    current = row_basis(base) if base.rows else BitMatrix.zeros(0, base.cols)
    r = current.rows
    for i in range(extra.rows):
        trial = current.vstack(extra.take_rows([i]))
        if rank(trial) > r:
            current = trial
            r += 1
            picked.append(i)
    return extra.take_rows(picked)
