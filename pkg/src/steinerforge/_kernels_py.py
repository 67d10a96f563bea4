"""Pure Python / numpy implementations of the three hot kernels.

A compiled twin (`_kernels`) implements the same three entry points; the
selector in `kernels` picks whichever is available.  Everything here is
exact integer work, vectorised with numpy where it pays off.

Kernel contracts
----------------
weight_histogram_range(rows, ncols, lo, hi)
    Histogram of Hamming weights of the words spanned by `rows` (ints, bit j
    = coordinate j), enumerated in Gray-code order over message indices
    [lo, hi) inside [0, 2^k).  Returns an int64 array of length ncols + 1.

mitm_pairs(cs, a, b, first_only)
    cs holds one parity-check syndrome per coordinate (uint64).  Emits the
    supports of all weight-(a+b) words found as a disjoint union of an
    a-subset and a b-subset with equal syndromes, each support exactly once
    (only the split "a lowest positions | b highest" is emitted, and that
    split always exists, so the output is exactly the set of weight-(a+b)
    codeword supports).  Returns a (count, a+b) uint16 array, rows ascending.

pair_coverage_range(blocks, v, lo, hi)
    Exact count, for every unordered point pair, of the blocks with rows in
    [lo, hi) that contain it.  blocks is (b, k) uint32 with strictly
    ascending rows; the flat index of pair (i < j) is j*(j-1)/2 + i.
"""
from __future__ import annotations

import numpy as np

_LO16 = np.uint64(0xFFFF)


def weight_histogram_range(rows, ncols, lo, hi):
    counts = np.zeros(ncols + 1, dtype=np.int64)
    tmp = [0] * (ncols + 1)
    g = lo ^ (lo >> 1)
    acc = 0
    while g:
        acc ^= rows[(g & -g).bit_length() - 1]
        g &= g - 1
    tmp[acc.bit_count()] += 1
    for i in range(lo + 1, hi):
        acc ^= rows[(i & -i).bit_length() - 1]
        tmp[acc.bit_count()] += 1
    counts += np.asarray(tmp, dtype=np.int64)
    return counts


def _subset_syndromes(cs: np.ndarray, a: int):
    """Syndromes and packed position tuples of all a-subsets of coordinates.

    packed = p0 | p1 << 16 | ... with p0 < p1 < ...; the top chunk is the
    largest position, so packed order refines "largest element" order.
    """
    n = cs.shape[0]
    if a == 1:
        return cs.copy(), np.arange(n, dtype=np.uint64)
    if a == 2:
        i, j = np.triu_indices(n, 1)
        syn = cs[i] ^ cs[j]
        packed = i.astype(np.uint64) | (j.astype(np.uint64) << np.uint64(16))
        return syn, packed
    if a == 3:
        syns, packs = [], []
        for i in range(n - 2):
            jj, kk = np.triu_indices(n - i - 1, 1)
            jj += i + 1
            kk += i + 1
            syns.append(cs[i] ^ cs[jj] ^ cs[kk])
            packs.append(
                np.uint64(i)
                | (jj.astype(np.uint64) << np.uint64(16))
                | (kk.astype(np.uint64) << np.uint64(32))
            )
        return np.concatenate(syns), np.concatenate(packs)
    if a == 4:
        syns, packs = [], []
        for i in range(n - 3):
            for j in range(i + 1, n - 2):
                kk, ll = np.triu_indices(n - j - 1, 1)
                kk += j + 1
                ll += j + 1
                syns.append(cs[i] ^ cs[j] ^ cs[kk] ^ cs[ll])
                packs.append(
                    np.uint64(i)
                    | (np.uint64(j) << np.uint64(16))
                    | (kk.astype(np.uint64) << np.uint64(32))
                    | (ll.astype(np.uint64) << np.uint64(48))
                )
        return np.concatenate(syns), np.concatenate(packs)
    raise ValueError("subset size must be 1..4")


def _unpack_supports(pa, a, pb, b):
    cols = []
    for t in range(a):
        cols.append((pa >> np.uint64(16 * t)) & _LO16)
    for t in range(b):
        cols.append((pb >> np.uint64(16 * t)) & _LO16)
    return np.stack(cols, axis=1).astype(np.uint16)


_PAIR_CHUNK = 1 << 22


def _match_same(syn, packed, a, first_only):
    """Pairs within one sorted-by-(syn, packed) list; emits max(A) < min(B)."""
    order = np.lexsort((packed, syn))
    syn = syn[order]
    packed = packed[order]
    n = syn.shape[0]
    w = 2 * a
    if n < 2:
        return np.empty((0, w), dtype=np.uint16)
    newrun = np.empty(n, dtype=bool)
    newrun[0] = True
    np.not_equal(syn[1:], syn[:-1], out=newrun[1:])
    run_start = np.flatnonzero(newrun)
    start_of = run_start[np.cumsum(newrun) - 1]
    reps = np.arange(n, dtype=np.int64) - start_of
    cum = np.concatenate(([0], np.cumsum(reps)))
    shift = np.uint64(16 * (a - 1))
    out = []
    step = max(1, _PAIR_CHUNK // max(1, int(reps.max(initial=0)) or 1))
    s = 0
    while s < n:
        e = min(s + step, n)
        cnt = int(cum[e] - cum[s])
        if cnt:
            idx_j = np.repeat(np.arange(s, e, dtype=np.int64), reps[s:e])
            within = np.arange(cnt, dtype=np.int64) - np.repeat(
                cum[s:e] - cum[s], reps[s:e]
            )
            idx_i = start_of[idx_j] + within
            cond = (packed[idx_i] >> shift) < (packed[idx_j] & _LO16)
            if cond.any():
                hit = _unpack_supports(packed[idx_i][cond], a, packed[idx_j][cond], a)
                if first_only:
                    return hit[:1]
                out.append(hit)
        s = e
    if not out:
        return np.empty((0, w), dtype=np.uint16)
    return np.concatenate(out, axis=0)


def _match_cross(syn_a, packed_a, a, syn_b, packed_b, b, first_only):
    """Pairs across two lists (sizes a != b); emits max(A) < min(B)."""
    oa = np.argsort(syn_a, kind="stable")
    syn_a, packed_a = syn_a[oa], packed_a[oa]
    ob = np.argsort(syn_b, kind="stable")
    syn_b, packed_b = syn_b[ob], packed_b[ob]
    ua, sa, ca = np.unique(syn_a, return_index=True, return_counts=True)
    ub, sb, cb = np.unique(syn_b, return_index=True, return_counts=True)
    common, ia, ib = np.intersect1d(ua, ub, return_indices=True)
    shift = np.uint64(16 * (a - 1))
    w = a + b
    out = []
    for t in range(common.shape[0]):
        pa = packed_a[sa[ia[t]] : sa[ia[t]] + ca[ia[t]]]
        pb = packed_b[sb[ib[t]] : sb[ib[t]] + cb[ib[t]]]
        cond = (pa[:, None] >> shift) < (pb[None, :] & _LO16)
        if cond.any():
            ii, jj = np.nonzero(cond)
            hit = _unpack_supports(pa[ii], a, pb[jj], b)
            if first_only:
                return hit[:1]
            out.append(hit)
    if not out:
        return np.empty((0, w), dtype=np.uint16)
    return np.concatenate(out, axis=0)


def mitm_pairs(cs: np.ndarray, a: int, b: int, first_only: bool = False):
    if not 1 <= a <= 4 or not 1 <= b <= 4 or a > b:
        raise ValueError("subset sizes must satisfy 1 <= a <= b <= 4")
    syn_a, packed_a = _subset_syndromes(cs, a)
    if a == b:
        return _match_same(syn_a, packed_a, a, first_only)
    syn_b, packed_b = _subset_syndromes(cs, b)
    return _match_cross(syn_a, packed_a, a, syn_b, packed_b, b, first_only)


def pair_coverage_range(blocks: np.ndarray, v: int, lo: int, hi: int):
    size = v * (v - 1) // 2
    counts = np.zeros(size, dtype=np.int64)
    part = blocks[lo:hi].astype(np.int64)
    k = part.shape[1]
    for p in range(k):
        i = part[:, p]
        for q in range(p + 1, k):
            j = part[:, q]
            counts += np.bincount(j * (j - 1) // 2 + i, minlength=size)
    return counts
