"""Shortest self-orthogonal embedding by coset-leader decoding of the SO_k syndrome."""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Union

import numpy as np

from . import kernels
from .code import LinearCode, min_distance
from .gf2 import BitMatrix, BitVector
from .reed_muller import so_matrix
from .so_analysis import Syndrome, syndrome

log = logging.getLogger(__name__)

MAGIC = b"SOCT"
FORMAT_VERSION = 1
DEFAULT_MAX_TABLE_K = 6
_CHUNK = 1 << 20


class TableRangeError(ValueError):
    pass


class CacheError(ValueError):
    pass


def embedding_bound(k: int) -> int:
    """Most columns any shortest embedding of a k-row generator needs."""
    return k + 1 if k % 2 == 0 else k


def syndrome_bits(k: int) -> int:
    return k * (k + 1) // 2


@dataclass(eq=False)
class CosetLeaderTable:
    """One lexicographically-least minimum-weight leader per SO_k syndrome.

    Leaders are stored as integer keys: the sorted support p_1 < ... < p_w is
    the base-2^k number p_1 p_2 ... p_w, so for a fixed weight numeric order
    is lexicographic order of supports.
    """

    k: int
    weights: np.ndarray
    keys: np.ndarray
    covering_radius: int = field(init=False)

    def __post_init__(self):
        self.covering_radius = int(self.weights.max())
        self.weights.flags.writeable = False
        self.keys.flags.writeable = False

    @property
    def nbits(self) -> int:
        return syndrome_bits(self.k)

    @property
    def base(self) -> int:
        return 1 << self.k

    def __len__(self) -> int:
        return self.weights.shape[0]

    def leader(self, s: int) -> list[int]:
        w = int(self.weights[s])
        key = int(self.keys[s])
        out = []
        for _ in range(w):
            key, p = divmod(key, self.base)
            out.append(p)
        return out[::-1]

    def position_records(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Supports for syndromes start..stop-1 as zero-padded rows of k+1 positions."""
        stop = len(self) if stop is None else stop
        w = self.weights[start:stop].astype(np.int64)
        keys = self.keys[start:stop]
        width = self.k + 1
        digits = np.empty((keys.shape[0], width), dtype=np.int64)
        rest = keys.copy()
        for i in range(width):
            digits[:, i] = rest % self.base
            rest //= self.base
        j = np.arange(width)[None, :]
        idx = np.clip(w[:, None] - 1 - j, 0, width - 1)
        pos = np.take_along_axis(digits, idx, axis=1)
        pos[j >= w[:, None]] = 0
        return pos

    def same_as(self, other: "CosetLeaderTable") -> bool:
        return (
            self.k == other.k
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.keys, other.keys)
        )


def _check_table_k(k: int, allow_k7: bool) -> None:
    top = 7 if allow_k7 else DEFAULT_MAX_TABLE_K
    if not 2 <= k <= top:
        hint = " (k=7 needs the explicit opt-in)" if k == 7 else ""
        raise TableRangeError(f"coset tables are supported for 2 <= k <= {top}, got {k}{hint}")


def _build(k: int) -> CosetLeaderTable:
    colsyn = np.array(so_matrix(k).column_syndromes())
    weights, keys = kernels.coset_bfs(colsyn, syndrome_bits(k), 1 << k)
    if (weights == kernels.UNASSIGNED).any():
        raise RuntimeError("SO matrix does not reach every syndrome")
    return CosetLeaderTable(k, weights, keys)


def cache_path(cache_dir: Union[str, Path], k: int) -> Path:
    return Path(cache_dir) / f"soct{FORMAT_VERSION}_k{k}.bin"


def build_coset_table(
    k: int, cache: Union[str, Path, None] = None, allow_k7: bool = False
) -> CosetLeaderTable:
    """Exhaustive BFS over error patterns of increasing weight.

    With ``cache`` (a directory) a valid SOCT1 file is loaded instead of
    rebuilding; a missing or corrupt one is (re)written after the build.
    """
    _check_table_k(k, allow_k7)
    path = cache_path(cache, k) if cache is not None else None
    if path is not None and path.exists():
        try:
            return read_table(path, expect_k=k)
        except CacheError as exc:
            warnings.warn(f"rebuilding coset table for k={k}: {exc}", stacklevel=2)
    table = _build(k)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        write_table(table, path)
    return table


_MEMO: dict[int, CosetLeaderTable] = {}


def coset_table(k: int, cache: Union[str, Path, None] = None, allow_k7: bool = False) -> CosetLeaderTable:
    """Process-wide memoised :func:`build_coset_table`."""
    if k not in _MEMO:
        _MEMO[k] = build_coset_table(k, cache, allow_k7)
    return _MEMO[k]


def write_table(table: CosetLeaderTable, path: Union[str, Path]) -> None:
    """SOCT1: magic, version, k, rho, then one record per syndrome in increasing order.

    A record is 1 + (k+1) bytes: the weight, then the 1-based positions, zero padded.
    """
    tmp = Path(str(path) + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(MAGIC + bytes([FORMAT_VERSION, table.k, table.covering_radius]))
        for start in range(0, len(table), _CHUNK):
            stop = min(start + _CHUNK, len(table))
            rec = np.empty((stop - start, table.k + 2), dtype=np.uint8)
            rec[:, 0] = table.weights[start:stop]
            rec[:, 1:] = table.position_records(start, stop)
            fh.write(rec.tobytes())
    tmp.replace(path)


def read_table(path: Union[str, Path], expect_k: int | None = None) -> CosetLeaderTable:
    raw = Path(path).read_bytes()
    if len(raw) < 7 or raw[:4] != MAGIC:
        raise CacheError("bad magic")
    version, k, rho = raw[4], raw[5], raw[6]
    if version != FORMAT_VERSION:
        raise CacheError(f"unsupported version {version}")
    if expect_k is not None and k != expect_k:
        raise CacheError(f"file holds k={k}, expected {expect_k}")
    if not 2 <= k <= 7:
        raise CacheError(f"k={k} out of range")
    nsyn = 1 << syndrome_bits(k)
    width = k + 2
    if len(raw) != 7 + nsyn * width:
        raise CacheError("truncated or oversized file")
    rec = np.frombuffer(raw, dtype=np.uint8, offset=7).reshape(nsyn, width)
    weights = rec[:, 0].copy()
    pos = rec[:, 1:].astype(np.int64)
    if weights.max() != rho or weights.max() > k + 1:
        raise CacheError("covering radius field disagrees with records")
    base = 1 << k
    j = np.arange(k + 1)[None, :]
    live = j < weights[:, None]
    if (pos[~live] != 0).any() or (pos[live] == 0).any() or (pos >= base).any():
        raise CacheError("malformed position bytes")
    steps = np.diff(np.where(live, pos, base), axis=1)
    if (steps[live[:, 1:]] <= 0).any():
        raise CacheError("supports not strictly increasing")
    colsyn = np.array(so_matrix(k).column_syndromes())
    check = np.bitwise_xor.reduce(colsyn[pos], axis=1)
    if not np.array_equal(check, np.arange(nsyn)):
        raise CacheError("records do not reproduce their syndromes")
    keys = np.zeros(nsyn, dtype=np.int64)
    for col in range(k + 1):
        keys = np.where(live[:, col], keys * base + pos[:, col], keys)
    return CosetLeaderTable(k, weights, keys)


def _syndrome_int(table: CosetLeaderTable, s) -> int:
    if isinstance(s, Syndrome):
        if s.k != table.k:
            raise ValueError(f"syndrome is for k={s.k}, table is for k={table.k}")
        s = s.bits
    if isinstance(s, str):
        s = BitVector.from_string(s)
    if isinstance(s, BitVector):
        if s.length != table.nbits:
            raise ValueError(f"syndrome has {s.length} bits, table expects {table.nbits}")
        return s.to_int()
    s = int(s)
    if not 0 <= s < len(table):
        raise ValueError("syndrome integer out of range")
    return s


def coset_leader(table: CosetLeaderTable, s) -> list[int]:
    """Minimum-weight support (1-based positions) with SO_k syndrome ``s``."""
    return table.leader(_syndrome_int(table, s))


def covering_radius(table: CosetLeaderTable) -> int:
    return table.covering_radius


def simplex_columns(k: int, positions) -> BitMatrix:
    """Columns h_i (i in binary, MSB on top) for the given positions."""
    positions = list(positions)
    bits = np.array([[(i >> (k - 1 - r)) & 1 for i in positions] for r in range(k)], dtype=np.uint8)
    return BitMatrix.from_array(bits.reshape(k, len(positions)))


@dataclass
class EmbeddingReport:
    n: int
    k: int
    input_min_distance: int | None
    syndrome: str
    leader_support: list[int]
    appended_columns: list[str]
    output_n: int
    output_k: int
    output_min_distance: int | None
    was_already_so: bool

    def to_dict(self) -> dict:
        return {
            "appended_columns": list(self.appended_columns),
            "input": {"d": self.input_min_distance, "k": self.k, "n": self.n},
            "leader_support": list(self.leader_support),
            "output": {"d": self.output_min_distance, "k": self.output_k, "n": self.output_n},
            "syndrome": self.syndrome,
            "was_already_so": self.was_already_so,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingReport":
        return cls(
            n=data["input"]["n"],
            k=data["input"]["k"],
            input_min_distance=data["input"]["d"],
            syndrome=data["syndrome"],
            leader_support=list(data["leader_support"]),
            appended_columns=list(data["appended_columns"]),
            output_n=data["output"]["n"],
            output_k=data["output"]["k"],
            output_min_distance=data["output"]["d"],
            was_already_so=data["was_already_so"],
        )


def _distance_or_none(g: BitMatrix) -> int | None:
    code = LinearCode(g)
    return min_distance(code) if code.dimension else None


def embed(
    g: BitMatrix, table: CosetLeaderTable, with_distances: bool = True
) -> tuple[BitMatrix, EmbeddingReport]:
    """Append the columns h_i, i in the coset leader of the syndrome of ``g``."""
    if g.rows != table.k:
        raise ValueError(f"generator has {g.rows} rows, table is for k={table.k}")
    syn = syndrome(g)
    if syn.is_zero():
        support: list[int] = []
        out = g
    else:
        support = coset_leader(table, syn)
        out = g.hstack(simplex_columns(table.k, support))
    appended = simplex_columns(table.k, support).transpose().to_strings() if support else []
    report = EmbeddingReport(
        n=g.cols,
        k=LinearCode(g).dimension,
        input_min_distance=_distance_or_none(g) if with_distances else None,
        syndrome=str(syn),
        leader_support=support,
        appended_columns=appended,
        output_n=out.cols,
        output_k=LinearCode(out).dimension,
        output_min_distance=_distance_or_none(out) if with_distances else None,
        was_already_so=not support,
    )
    return out, report


def _pair_mask(value: int, k: int) -> int:
    """Bitmask over pairs i <= j of (bit i AND bit j) of a k-bit column."""
    bits = [(value >> (k - 1 - i)) & 1 for i in range(k)]
    mask = 0
    for i in range(k):
        for j in range(i, k):
            mask = (mask << 1) | (bits[i] & bits[j])
    return mask


def minimal_embedding_oracle(g: BitMatrix, w_max: int) -> int:
    """Fewest distinct nonzero columns whose addition makes G G^T vanish, by brute force.

    Works from the Gram matrix of ``g`` directly: appending a column h adds
    h h^T to G G^T. Every support of size w is tried before size w + 1.
    """
    k = g.rows
    gram = (g.to_array().astype(np.int64) @ g.to_array().T.astype(np.int64)) % 2
    target = 0
    for i in range(k):
        for j in range(i, k):
            target = (target << 1) | int(gram[i, j])
    masks = [_pair_mask(t, k) for t in range(1 << k)]
    for w in range(w_max + 1):
        for combo in combinations(range(1, 1 << k), w):
            acc = 0
            for t in combo:
                acc ^= masks[t]
            if acc == target:
                return w
    raise ValueError(f"no embedding with at most {w_max} columns")
