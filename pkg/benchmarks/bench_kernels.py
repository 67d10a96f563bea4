"""Timing comparison: compiled kernels vs the pure-Python fallback.

Runs the three hot kernels on representative workloads, checks that both
lanes produce identical results, and prints per-kernel timings with the
speedup factor.  Workloads come from the package's own constructions so
the numbers reflect real use.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--threads N]
"""
from __future__ import annotations

import argparse
import os
import time

import numpy as np

import steinerforge as sf
from steinerforge import _kernels_py
from steinerforge import kernels

try:
    from steinerforge import _kernels
except ImportError:
    _kernels = None


def _best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _sorted_rows(arr):
    if arr.shape[0] <= 1:
        return arr
    order = np.lexsort(tuple(arr[:, c] for c in range(arr.shape[1] - 1, -1, -1)))
    return arr[order]


def _row(label, workload, t_c, t_py):
    if t_c is None:
        speed = "n/a"
        t_c_s = "n/a"
    else:
        t_c_s = f"{t_c * 1e3:9.1f} ms"
        speed = f"{t_py / t_c:6.1f}x"
    print(f"{label:<26} {workload:<38} {t_c_s:>12} {t_py * 1e3:9.1f} ms {speed:>8}")


def bench_weight_histogram(repeat):
    code = sf.dual(sf.extend(sf.build_cyclic(sf.GF2m(8), [2])))
    rows, ncols = code.generator.rows, code.length
    total = 1 << len(rows)
    workload = f"[{code.length}, {code.dimension}] span, {total} words"
    t_py, h_py = _best_of(
        lambda: _kernels_py.weight_histogram_range(rows, ncols, 0, total), repeat
    )
    t_c = None
    if _kernels is not None:
        t_c, h_c = _best_of(
            lambda: _kernels.weight_histogram_range(rows, ncols, 0, total), repeat
        )
        assert np.array_equal(np.asarray(h_c), np.asarray(h_py))
    _row("weight_histogram_range", workload, t_c, t_py)


def bench_mitm(repeat):
    code = sf.extend(sf.build_cyclic(sf.GF2m(6), [2]))
    cs = np.array(
        [int(s) for s in sf.column_syndromes(code.parity_check)], dtype=np.uint64
    )
    for w in (6, 8):
        a, b = w // 2, w - w // 2
        workload = f"n={code.length}, w={w}, 13-bit syndromes"
        t_py, out_py = _best_of(
            lambda: _kernels_py.mitm_pairs(cs, a, b, False), repeat
        )
        t_c = None
        if _kernels is not None:
            t_c, out_c = _best_of(
                lambda: _kernels.mitm_pairs(cs, a, b, False), repeat
            )
            assert np.array_equal(_sorted_rows(out_c), _sorted_rows(out_py))
        _row(f"mitm_pairs (w={w})", workload, t_c, t_py)


def bench_pair_coverage(repeat):
    code = sf.extend(sf.build_cyclic(sf.GF2m(6), [2]))
    blocks = sf.enumerate_weight_w(code, 8, mode="mitm")
    v = code.length
    nb = blocks.shape[0]
    workload = f"{nb} blocks of size 8 on {v} points"
    t_py, cov_py = _best_of(
        lambda: _kernels_py.pair_coverage_range(blocks, v, 0, nb), repeat
    )
    t_c = None
    if _kernels is not None:
        t_c, cov_c = _best_of(
            lambda: _kernels.pair_coverage_range(blocks, v, 0, nb), repeat
        )
        assert np.array_equal(np.asarray(cov_c), np.asarray(cov_py))
    _row("pair_coverage_range", workload, t_c, t_py)


def bench_threads(threads, repeat):
    """Orchestrated lane: same kernel, partitioned across worker threads."""
    code = sf.dual(sf.extend(sf.build_cyclic(sf.GF2m(8), [2])))
    rows, ncols = code.generator.rows, code.length
    t_1, h_1 = _best_of(
        lambda: kernels.weight_histogram(rows, ncols, threads=1), repeat
    )
    t_n, h_n = _best_of(
        lambda: kernels.weight_histogram(rows, ncols, threads=threads), repeat
    )
    assert np.array_equal(np.asarray(h_1), np.asarray(h_n))
    print(
        f"{'weight_histogram':<26} {'same span, 1 vs ' + str(threads) + ' threads':<38}"
        f" {t_1 * 1e3:9.1f} ms {t_n * 1e3:9.1f} ms {t_1 / t_n:6.1f}x"
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    ap.add_argument(
        "--threads",
        type=int,
        default=min(os.cpu_count() or 1, 8),
        help="worker count for the threaded-orchestration row",
    )
    args = ap.parse_args()

    print(f"compiled extension available: {kernels.have_compiled()}")
    print(f"active backend: {kernels.active_backend()}")
    print(f"cpu count: {os.cpu_count()}, best of {args.repeat} runs")
    print()
    print(f"{'kernel':<26} {'workload':<38} {'compiled':>12} {'python':>12} {'speedup':>8}")
    print("-" * 100)
    bench_weight_histogram(args.repeat)
    bench_mitm(args.repeat)
    bench_pair_coverage(args.repeat)
    if args.threads > 1 and kernels.have_compiled():
        print()
        print("threaded orchestration (compiled lane):")
        bench_threads(args.threads, args.repeat)


if __name__ == "__main__":
    main()
