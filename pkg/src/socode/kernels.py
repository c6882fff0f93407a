"""Hot loops: GF(2) elimination, codeword enumeration, coset-leader BFS and
the puncture/embed scan used by the search.

Every kernel exists twice: an ``*_nb`` version compiled with numba and an
``*_np`` version written with vectorised numpy. The unsuffixed names dispatch
on :data:`socode._backend.USE_NUMBA`. Both versions return identical results;
the test-suite checks this.

Packed layout: a binary matrix is a ``uint64`` array of shape
``(rows, words)``; column ``c`` lives in word ``c // 64`` at bit ``c % 64``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._backend import USE_NUMBA, njit

UNASSIGNED = 255
_ONE = np.uint64(1)

if hasattr(np, "bitwise_count"):
    _bitcount = np.bitwise_count
else:  # numpy < 2
    _BYTE_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _bitcount(a):
        a = np.ascontiguousarray(a)
        b = a.view(np.uint8).reshape(a.shape + (a.itemsize,))
        return _BYTE_POP[b].sum(axis=-1, dtype=np.int64)


def row_weights(words: np.ndarray) -> np.ndarray:
    """Hamming weight of each packed row."""
    return _bitcount(words).sum(axis=-1, dtype=np.int64)


# ---------------------------------------------------------------- numba helpers


@njit
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit
def _ctz(i):
    j = 0
    while (i >> j) & 1 == 0:
        j += 1
    return j


# ---------------------------------------------------------------------- rref


@njit
def rref_nb(words, ncols):
    m = words.copy()
    nrows, nw = m.shape
    pivots = np.empty(min(nrows, ncols), dtype=np.int64)
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        w = col >> 6
        b = np.uint64(col & 63)
        piv = -1
        for i in range(row, nrows):
            if (m[i, w] >> b) & np.uint64(1):
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for x in range(nw):
                tmp = m[row, x]
                m[row, x] = m[piv, x]
                m[piv, x] = tmp
        for i in range(nrows):
            if i != row and (m[i, w] >> b) & np.uint64(1):
                for x in range(nw):
                    m[i, x] ^= m[row, x]
        pivots[row] = col
        row += 1
    return m, pivots[:row].copy()


def rref_np(words: np.ndarray, ncols: int):
    m = words.copy()
    nrows = m.shape[0]
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        w, b = col >> 6, np.uint64(col & 63)
        hits = ((m[:, w] >> b) & _ONE).astype(bool)
        below = np.flatnonzero(hits[row:])
        if below.size == 0:
            continue
        piv = row + below[0]
        if piv != row:
            m[[row, piv]] = m[[piv, row]]
            hits[[row, piv]] = hits[[piv, row]]
        hits[row] = False
        m[hits] ^= m[row]
        pivots.append(col)
        row += 1
    return m, np.array(pivots, dtype=np.int64)


# ------------------------------------------------------- codeword enumeration


@njit
def weight_histogram_nb(words, ncols, skip_low):
    nrows, nw = words.shape
    hist = np.zeros(ncols + 1, dtype=np.int64)
    cur = np.zeros(nw, dtype=np.uint64)
    start = 1 << skip_low
    total = 1 << nrows
    for i in range(1, total):
        j = _ctz(i)
        wt = 0
        for x in range(nw):
            cur[x] ^= words[j, x]
            wt += _popcount64(cur[x])
        if i >= start:
            hist[wt] += 1
    return hist


def weight_histogram_np(words: np.ndarray, ncols: int, skip_low: int, table_bits: int = 16):
    nrows, nw = words.shape
    hist = np.zeros(ncols + 1, dtype=np.int64)
    low = min(nrows, table_bits)
    table = np.zeros((1 << low, nw), dtype=np.uint64)
    for j in range(low):
        table[1 << j: 2 << j] = table[: 1 << j] ^ words[j]
    outer = words[low:]
    cur = np.zeros(nw, dtype=np.uint64)
    coeff = 0
    for idx in range(1 << (nrows - low)):
        if idx:
            j = (idx & -idx).bit_length() - 1
            cur ^= outer[j]
            coeff ^= 1 << j
        if skip_low <= low:
            first = (1 << skip_low) if coeff == 0 else 0
        elif coeff >> (skip_low - low) == 0:
            continue
        else:
            first = 0
        wts = row_weights(table[first:] ^ cur)
        hist += np.bincount(wts, minlength=ncols + 1)
    return hist


# -------------------------------------------------------- coset-leader BFS


@njit
def coset_bfs_nb(colsyn, nbits, base):
    nsyn = 1 << nbits
    npos = colsyn.shape[0] - 1
    weight = np.full(nsyn, UNASSIGNED, dtype=np.uint8)
    keys = np.zeros(nsyn, dtype=np.int64)
    weight[0] = 0
    assigned = 1
    w = 0
    while assigned < nsyn and w < 64:
        w += 1
        for s in range(nsyn):
            if weight[s] != w - 1:
                continue
            key = keys[s]
            last = key % base if w > 1 else 0
            for i in range(last + 1, npos + 1):
                t = s ^ colsyn[i]
                cand = key * base + i
                wt = weight[t]
                if wt == UNASSIGNED:
                    weight[t] = w
                    keys[t] = cand
                    assigned += 1
                elif wt == w and cand < keys[t]:
                    keys[t] = cand
    return weight, keys


def coset_bfs_np(colsyn: np.ndarray, nbits: int, base: int):
    nsyn = 1 << nbits
    npos = colsyn.shape[0] - 1
    weight = np.full(nsyn, UNASSIGNED, dtype=np.uint8)
    keys = np.zeros(nsyn, dtype=np.int64)
    weight[0] = 0
    assigned = 1
    w = 0
    sentinel = np.iinfo(np.int64).max
    while assigned < nsyn and w < 64:
        w += 1
        front = np.flatnonzero(weight == w - 1)
        fkeys = keys[front]
        last = fkeys % base if w > 1 else np.zeros_like(fkeys)
        best = np.full(nsyn, sentinel, dtype=np.int64)
        for i in range(1, npos + 1):
            sel = last < i
            tgt = front[sel] ^ colsyn[i]
            cand = fkeys[sel] * base + i
            fresh = weight[tgt] == UNASSIGNED
            np.minimum.at(best, tgt[fresh], cand[fresh])
        new = best != sentinel
        weight[new] = w
        keys[new] = best[new]
        assigned += int(new.sum())
    return weight, keys


# ------------------------------------------------- puncture + embed scan


@njit
def _min_nonzero_msg(wts):
    d = wts[1]
    for m in range(2, wts.shape[0]):
        if wts[m] < d:
            d = wts[m]
    return d


@njit
def puncture_scan_nb(types, colsyn, lead_w, lead_key, base, parity, t_max):
    n = types.shape[0]
    q = parity.shape[0]
    out_len = n + 64
    best_d = np.full(out_len, -1, dtype=np.int64)
    best_t = np.zeros(out_len, dtype=np.int64)
    best_sub = np.full((out_len, max(t_max, 1)), -1, dtype=np.int64)
    w0 = np.zeros(q, dtype=np.int64)
    s0 = 0
    for c in range(n):
        s0 ^= colsyn[types[c]]
        for m in range(q):
            w0[m] += parity[m, types[c]]
    wts = np.empty(q, dtype=np.int64)
    comb = np.zeros(max(t_max, 1), dtype=np.int64)
    evaluated = 0
    for t in range(min(t_max, n) + 1):
        for j in range(t):
            comb[j] = j
        while True:
            s = s0
            for m in range(q):
                wts[m] = w0[m]
            for j in range(t):
                c = types[comb[j]]
                s ^= colsyn[c]
                for m in range(q):
                    wts[m] -= parity[m, c]
            evaluated += 1
            if _min_nonzero_msg(wts) >= 1:
                wl = lead_w[s]
                key = lead_key[s]
                for _ in range(wl):
                    pos = key % base
                    key //= base
                    for m in range(q):
                        wts[m] += parity[m, pos]
                d = _min_nonzero_msg(wts)
                nn = n - t + wl
                if d > best_d[nn]:
                    best_d[nn] = d
                    best_t[nn] = t
                    for j in range(t):
                        best_sub[nn, j] = comb[j]
                    for j in range(t, best_sub.shape[1]):
                        best_sub[nn, j] = -1
            if t == 0:
                break
            j = 0
            while j < t - 1 and comb[j] + 1 == comb[j + 1]:
                j += 1
            if j == t - 1 and comb[j] + 1 == n:
                break
            comb[j] += 1
            for i in range(j):
                comb[i] = i
    return best_d, best_t, best_sub, evaluated


@lru_cache(maxsize=512)
def _colex_block(t: int, n: int) -> np.ndarray:
    """All t-subsets of range(n) in colex order, one per row."""
    if t == 0:
        return np.zeros((1, 0), dtype=np.int64)
    parts = [
        np.hstack([_colex_block(t - 1, top), np.full((_comb(top, t - 1), 1), top, dtype=np.int64)])
        for top in range(t - 1, n)
    ]
    if not parts:
        return np.zeros((0, t), dtype=np.int64)
    return np.vstack(parts)


def _comb(n: int, t: int) -> int:
    from math import comb

    return comb(n, t)


def colex_chunks(n: int, t: int):
    """Yield the t-subsets of range(n) in colex order, chunked by largest element."""
    if t == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    for top in range(t - 1, n):
        head = _colex_block(t - 1, top)
        yield np.hstack([head, np.full((head.shape[0], 1), top, dtype=np.int64)])


def puncture_scan_np(types, colsyn, lead_w, lead_key, base, parity, t_max):
    n = types.shape[0]
    out_len = n + 64
    best_d = np.full(out_len, -1, dtype=np.int64)
    best_t = np.zeros(out_len, dtype=np.int64)
    best_sub = np.full((out_len, max(t_max, 1)), -1, dtype=np.int64)
    cols = parity.T  # cols[c] = weight contribution of one column of type c
    w0 = cols[types].sum(axis=0)
    s0 = np.bitwise_xor.reduce(colsyn[types]) if n else 0
    max_w = int(lead_w.max())
    evaluated = 0
    for t in range(min(t_max, n) + 1):
        for sub in colex_chunks(n, t):
            evaluated += sub.shape[0]
            c = types[sub]
            syn = s0 ^ np.bitwise_xor.reduce(colsyn[c], axis=1) if t else np.full(sub.shape[0], s0)
            wts = w0 - cols[c].sum(axis=1)
            ok = wts[:, 1:].min(axis=1) >= 1
            if not ok.any():
                continue
            sub, syn, wts = sub[ok], syn[ok], wts[ok]
            wl = lead_w[syn].astype(np.int64)
            keys = lead_key[syn].copy()
            for _ in range(max_w):
                wts += cols[keys % base]
                keys //= base
            d = wts[:, 1:].min(axis=1)
            nn = n - t + wl
            for length in np.unique(nn):
                idx = np.flatnonzero(nn == length)
                first = idx[np.argmax(d[idx])]
                if d[first] > best_d[length]:
                    best_d[length] = d[first]
                    best_t[length] = t
                    best_sub[length] = -1
                    best_sub[length, :t] = sub[first]
    return best_d, best_t, best_sub, evaluated


if USE_NUMBA:
    rref_packed = rref_nb
    weight_histogram = weight_histogram_nb
    coset_bfs = coset_bfs_nb
    puncture_scan = puncture_scan_nb
else:
    rref_packed = rref_np
    weight_histogram = weight_histogram_np
    coset_bfs = coset_bfs_np
    puncture_scan = puncture_scan_np
