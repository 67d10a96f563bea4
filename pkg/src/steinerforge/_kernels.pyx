# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in `_kernels_py` (identical contracts)."""
import numpy as np

from libc.stdint cimport int64_t, uint16_t, uint32_t, uint64_t

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    """
    int POPCNT64(unsigned long long) nogil
    int CTZ64(unsigned long long) nogil

DEF MAXWORDS = 32  # up to 2048 columns


cdef void _hist_core(uint64_t[:, ::1] words, Py_ssize_t nwords,
                     uint64_t lo, uint64_t hi, int64_t* counts) noexcept nogil:
    cdef uint64_t acc[MAXWORDS]
    cdef Py_ssize_t t
    cdef uint64_t g, i
    cdef int b, w
    for t in range(nwords):
        acc[t] = 0
    g = lo ^ (lo >> 1)
    while g:
        b = CTZ64(g)
        g &= g - 1
        for t in range(nwords):
            acc[t] ^= words[b, t]
    w = 0
    for t in range(nwords):
        w += POPCNT64(acc[t])
    counts[w] += 1
    i = lo + 1
    while i < hi:
        b = CTZ64(i)
        for t in range(nwords):
            acc[t] ^= words[b, t]
        w = 0
        for t in range(nwords):
            w += POPCNT64(acc[t])
        counts[w] += 1
        i += 1


def weight_histogram_range(rows, ncols, lo, hi):
    cdef Py_ssize_t nwords = (ncols + 63) // 64
    if nwords > MAXWORDS:
        raise ValueError(f"compiled kernel supports up to {64 * MAXWORDS} columns")
    k = len(rows)
    packed = np.zeros((max(k, 1), nwords), dtype=np.uint64)
    nb = nwords * 8
    for idx, r in enumerate(rows):
        packed[idx] = np.frombuffer(int(r).to_bytes(nb, "little"), dtype=np.uint64)
    counts = np.zeros(ncols + 1, dtype=np.int64)
    cdef uint64_t[:, ::1] wv = packed
    cdef int64_t[::1] cv = counts
    cdef uint64_t clo = lo, chi = hi
    if chi > clo:
        with nogil:
            _hist_core(wv, nwords, clo, chi, &cv[0])
    return counts


# ---------------------------------------------------------------------------
# subset enumeration


cdef void _subs1(uint64_t[::1] cs, uint64_t[::1] syn, uint64_t[::1] packed) noexcept nogil:
    cdef Py_ssize_t n = cs.shape[0], i
    for i in range(n):
        syn[i] = cs[i]
        packed[i] = <uint64_t> i


cdef void _subs2(uint64_t[::1] cs, uint64_t[::1] syn, uint64_t[::1] packed) noexcept nogil:
    cdef Py_ssize_t n = cs.shape[0], i, j, idx = 0
    cdef uint64_t si
    for i in range(n - 1):
        si = cs[i]
        for j in range(i + 1, n):
            syn[idx] = si ^ cs[j]
            packed[idx] = (<uint64_t> i) | ((<uint64_t> j) << 16)
            idx += 1


cdef void _subs3(uint64_t[::1] cs, uint64_t[::1] syn, uint64_t[::1] packed) noexcept nogil:
    cdef Py_ssize_t n = cs.shape[0], i, j, k, idx = 0
    cdef uint64_t si, sj, pj
    for i in range(n - 2):
        si = cs[i]
        for j in range(i + 1, n - 1):
            sj = si ^ cs[j]
            pj = (<uint64_t> i) | ((<uint64_t> j) << 16)
            for k in range(j + 1, n):
                syn[idx] = sj ^ cs[k]
                packed[idx] = pj | ((<uint64_t> k) << 32)
                idx += 1


cdef void _subs4(uint64_t[::1] cs, uint64_t[::1] syn, uint64_t[::1] packed) noexcept nogil:
    cdef Py_ssize_t n = cs.shape[0], i, j, k, l, idx = 0
    cdef uint64_t si, sj, sk, pk
    for i in range(n - 3):
        si = cs[i]
        for j in range(i + 1, n - 2):
            sj = si ^ cs[j]
            for k in range(j + 1, n - 1):
                sk = sj ^ cs[k]
                pk = (<uint64_t> i) | ((<uint64_t> j) << 16) | ((<uint64_t> k) << 32)
                for l in range(k + 1, n):
                    syn[idx] = sk ^ cs[l]
                    packed[idx] = pk | ((<uint64_t> l) << 48)
                    idx += 1


def _subset_syndromes(cs_arr, int a):
    from math import comb
    n = cs_arr.shape[0]
    total = comb(n, a)
    syn = np.empty(total, dtype=np.uint64)
    packed = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] csv = cs_arr
    cdef uint64_t[::1] sv = syn
    cdef uint64_t[::1] pv = packed
    if total:
        with nogil:
            if a == 1:
                _subs1(csv, sv, pv)
            elif a == 2:
                _subs2(csv, sv, pv)
            elif a == 3:
                _subs3(csv, sv, pv)
            else:
                _subs4(csv, sv, pv)
    return syn, packed


# ---------------------------------------------------------------------------
# pair matching


cdef void _unpack_row(uint64_t pa, int a, uint64_t pb, int b,
                      uint16_t[:, ::1] out, int64_t row) noexcept nogil:
    cdef int t
    for t in range(a):
        out[row, t] = <uint16_t> ((pa >> (16 * t)) & 0xFFFF)
    for t in range(b):
        out[row, a + t] = <uint16_t> ((pb >> (16 * t)) & 0xFFFF)


cdef int64_t _scan_same(uint64_t[::1] syn, uint64_t[::1] packed, int a,
                        uint16_t[:, ::1] out, bint fill, bint first_only) noexcept nogil:
    cdef Py_ssize_t n = syn.shape[0]
    cdef Py_ssize_t rs = 0, i, j, t
    cdef int shift = 16 * (a - 1)
    cdef int64_t cnt = 0
    for i in range(1, n + 1):
        if i == n or syn[i] != syn[rs]:
            for j in range(rs + 1, i):
                for t in range(rs, j):
                    if (packed[t] >> shift) < (packed[j] & 0xFFFF):
                        if fill:
                            _unpack_row(packed[t], a, packed[j], a, out, cnt)
                        cnt += 1
                        if first_only:
                            return cnt
            rs = i
    return cnt


cdef int64_t _scan_cross(uint64_t[::1] syn_a, uint64_t[::1] packed_a, int a,
                         uint64_t[::1] syn_b, uint64_t[::1] packed_b, int b,
                         uint16_t[:, ::1] out, bint fill, bint first_only) noexcept nogil:
    cdef Py_ssize_t na = syn_a.shape[0], nb = syn_b.shape[0]
    cdef Py_ssize_t ia = 0, ib = 0, ea, eb, i, j
    cdef int shift = 16 * (a - 1)
    cdef int64_t cnt = 0
    cdef uint64_t s
    while ia < na and ib < nb:
        if syn_a[ia] < syn_b[ib]:
            ia += 1
        elif syn_a[ia] > syn_b[ib]:
            ib += 1
        else:
            s = syn_a[ia]
            ea = ia
            while ea < na and syn_a[ea] == s:
                ea += 1
            eb = ib
            while eb < nb and syn_b[eb] == s:
                eb += 1
            for i in range(ia, ea):
                for j in range(ib, eb):
                    if (packed_a[i] >> shift) < (packed_b[j] & 0xFFFF):
                        if fill:
                            _unpack_row(packed_a[i], a, packed_b[j], b, out, cnt)
                        cnt += 1
                        if first_only:
                            return cnt
            ia = ea
            ib = eb
    return cnt


def mitm_pairs(cs_arr, int a, int b, bint first_only=False):
    if not (1 <= a <= 4 and 1 <= b <= 4 and a <= b):
        raise ValueError("subset sizes must satisfy 1 <= a <= b <= 4")
    cs64 = np.ascontiguousarray(cs_arr, dtype=np.uint64)
    syn_a, packed_a = _subset_syndromes(cs64, a)
    order = np.lexsort((packed_a, syn_a))
    syn_a = np.ascontiguousarray(syn_a[order])
    packed_a = np.ascontiguousarray(packed_a[order])
    cdef uint64_t[::1] sa = syn_a
    cdef uint64_t[::1] pa = packed_a
    cdef uint64_t[::1] sb
    cdef uint64_t[::1] pb
    cdef int64_t cnt
    cdef uint16_t[:, ::1] ov
    w = a + b
    dummy = np.empty((1, w), dtype=np.uint16)
    if a == b:
        if first_only:
            out = np.empty((1, w), dtype=np.uint16)
            ov = out
            with nogil:
                cnt = _scan_same(sa, pa, a, ov, True, True)
            return out[: int(cnt)]
        ov = dummy
        with nogil:
            cnt = _scan_same(sa, pa, a, ov, False, False)
        out = np.empty((int(cnt), w), dtype=np.uint16)
        if cnt:
            ov = out
            with nogil:
                _scan_same(sa, pa, a, ov, True, False)
        return out
    syn_b_, packed_b_ = _subset_syndromes(cs64, b)
    order = np.lexsort((packed_b_, syn_b_))
    syn_b_ = np.ascontiguousarray(syn_b_[order])
    packed_b_ = np.ascontiguousarray(packed_b_[order])
    sb = syn_b_
    pb = packed_b_
    if first_only:
        out = np.empty((1, w), dtype=np.uint16)
        ov = out
        with nogil:
            cnt = _scan_cross(sa, pa, a, sb, pb, b, ov, True, True)
        return out[: int(cnt)]
    ov = dummy
    with nogil:
        cnt = _scan_cross(sa, pa, a, sb, pb, b, ov, False, False)
    out = np.empty((int(cnt), w), dtype=np.uint16)
    if cnt:
        ov = out
        with nogil:
            _scan_cross(sa, pa, a, sb, pb, b, ov, True, False)
    return out


# ---------------------------------------------------------------------------
# pair coverage


cdef void _cov_core(uint32_t[:, ::1] blocks, Py_ssize_t lo, Py_ssize_t hi,
                    int64_t[::1] counts) noexcept nogil:
    cdef Py_ssize_t r, p, q, k = blocks.shape[1]
    cdef uint64_t i, j
    for r in range(lo, hi):
        for p in range(k - 1):
            i = blocks[r, p]
            for q in range(p + 1, k):
                j = blocks[r, q]
                counts[<Py_ssize_t> ((j * (j - 1)) // 2 + i)] += 1


def pair_coverage_range(blocks, v, lo, hi):
    arr = np.ascontiguousarray(blocks, dtype=np.uint32)
    counts = np.zeros(v * (v - 1) // 2, dtype=np.int64)
    cdef uint32_t[:, ::1] bv = arr
    cdef int64_t[::1] cv = counts
    cdef Py_ssize_t clo = lo, chi = hi
    if chi > clo:
        with nogil:
            _cov_core(bv, clo, chi, cv)
    return counts
