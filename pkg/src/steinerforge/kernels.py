"""Kernel selection (compiled extension vs pure fallback) and orchestration.

The compiled module `_kernels` is optional; `_kernels_py` implements the
same contracts in numpy/pure Python.  Set STEINERFORGE_FORCE_PYTHON=1 to
ignore the compiled module even when present.  Worker counts only partition
work into independent exact sub-counts, so results never depend on them.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels_py
from .errors import InfeasibleError

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _kernels = None

BRUTE_DIM_CAP = 28
MITM_SUBSET_CAP = 1 << 24
MITM_WEIGHT_CAP = 8
PAIR_INDEX_CAP = 1 << 28


def have_compiled() -> bool:
    return _kernels is not None


def _force_python() -> bool:
    return os.environ.get("STEINERFORGE_FORCE_PYTHON", "") not in ("", "0")


def active_backend() -> str:
    return "python" if (_kernels is None or _force_python()) else "compiled"


def _mod():
    return _kernels_py if active_backend() == "python" else _kernels


def resolve_threads(threads: int | None = None) -> int:
    """Explicit value, else STEINERFORGE_THREADS, else machine parallelism."""
    if threads is None:
        env = os.environ.get("STEINERFORGE_THREADS", "").strip()
        if env:
            threads = int(env)
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise ValueError("thread count must be >= 1")
    return int(threads)


def weight_histogram(rows, ncols: int, threads: int = 1):
    """Exact weight histogram of the span of `rows` (dimension <= 28)."""
    k = len(rows)
    if k > BRUTE_DIM_CAP:
        raise InfeasibleError(
            f"exhaustive enumeration capped at dimension {BRUTE_DIM_CAP}, got {k}"
        )
    total = 1 << k
    mod = _mod()
    threads = min(max(1, threads), 64)
    if mod is _kernels_py or threads == 1 or total < (1 << 18):
        return mod.weight_histogram_range(rows, ncols, 0, total)
    bounds = [total * t // threads for t in range(threads + 1)]
    jobs = [(bounds[t], bounds[t + 1]) for t in range(threads) if bounds[t] < bounds[t + 1]]
    with ThreadPoolExecutor(len(jobs)) as ex:
        parts = list(
            ex.map(lambda span: mod.weight_histogram_range(rows, ncols, *span), jobs)
        )
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def mitm_supports(
    col_syndromes,
    n: int,
    w: int,
    first_only: bool = False,
    max_subsets: int = MITM_SUBSET_CAP,
):
    """Supports of all weight-w codewords, by syndrome meet-in-the-middle.

    col_syndromes[j] is the parity-check syndrome of coordinate j as an int.
    Emits each support exactly once; rows are ascending position tuples,
    returned lexicographically sorted (first_only short-circuits at one hit).
    """
    if w < 2 or w > MITM_WEIGHT_CAP:
        raise InfeasibleError(
            f"meet-in-the-middle handles weights 2..{MITM_WEIGHT_CAP}, got {w}"
        )
    if n > 0xFFFF:
        raise InfeasibleError("meet-in-the-middle supports at most 65535 coordinates")
    a, b = w // 2, w - w // 2
    need = comb(n, b)
    if need > max_subsets:
        raise InfeasibleError(
            f"meet-in-the-middle on weight {w} needs C({n},{b}) = {need} subsets "
            f"(cap {max_subsets})"
        )
    rmax = max((int(s).bit_length() for s in col_syndromes), default=0)
    if rmax <= 64:
        cs = np.array([int(s) for s in col_syndromes], dtype=np.uint64)
        out = _mod().mitm_pairs(cs, a, b, first_only)
    else:
        out = _mitm_bigsyndrome(col_syndromes, a, b, first_only)
    if out.shape[0] > 1:
        order = np.lexsort(tuple(out[:, c] for c in range(out.shape[1] - 1, -1, -1)))
        out = out[order]
    return out


def _mitm_bigsyndrome(cols, a: int, b: int, first_only: bool):
    """Dict-bucketed route for syndromes wider than 64 bits (small n only)."""
    n = len(cols)
    if comb(n, b) > (1 << 21):
        raise InfeasibleError(
            f"wide-syndrome meet-in-the-middle capped at C(n,{b}) <= 2^21"
        )
    w = a + b
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for sub in combinations(range(n), a):
        s = 0
        for p in sub:
            s ^= cols[p]
        buckets.setdefault(s, []).append(sub)
    hits = []
    if a == b:
        for subs in buckets.values():
            for x in range(1, len(subs)):
                hi = subs[x][0]
                for y in range(x):
                    if subs[y][-1] < hi:
                        hits.append(subs[y] + subs[x])
                        if first_only:
                            return np.array(hits, dtype=np.uint16)
    else:
        for sub in combinations(range(n), b):
            s = 0
            for p in sub:
                s ^= cols[p]
            for other in buckets.get(s, ()):
                if other[-1] < sub[0]:
                    hits.append(other + sub)
                    if first_only:
                        return np.array(hits, dtype=np.uint16)
    if not hits:
        return np.empty((0, w), dtype=np.uint16)
    return np.array(hits, dtype=np.uint16)


def pair_coverage(blocks: np.ndarray, v: int, threads: int = 1):
    """Exact per-pair containment counts over all blocks (int64 array)."""
    size = v * (v - 1) // 2
    if size > PAIR_INDEX_CAP:
        raise InfeasibleError(
            f"pair-coverage table of size C({v},2) = {size} exceeds cap {PAIR_INDEX_CAP}"
        )
    nb = blocks.shape[0]
    mod = _mod()
    threads = min(max(1, threads), 64)
    if mod is _kernels_py or threads == 1 or nb < (1 << 16):
        return mod.pair_coverage_range(blocks, v, 0, nb)
    bounds = [nb * t // threads for t in range(threads + 1)]
    jobs = [(bounds[t], bounds[t + 1]) for t in range(threads) if bounds[t] < bounds[t + 1]]
    with ThreadPoolExecutor(len(jobs)) as ex:
        parts = list(
            ex.map(lambda span: mod.pair_coverage_range(blocks, v, *span), jobs)
        )
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out
