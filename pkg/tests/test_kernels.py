import random
from functools import reduce
from itertools import combinations

import numpy as np
import pytest

import steinerforge.kernels as kernels
import steinerforge._kernels_py as kpy
from steinerforge.errors import InfeasibleError

try:
    import steinerforge._kernels as kc

    HAVE_C = True
except ImportError:
    kc = None
    HAVE_C = False

needs_compiled = pytest.mark.skipif(not HAVE_C, reason="compiled kernels not built")


# ---------------------------------------------------------------------------
# weight histogram


def _hist_reference(rows, ncols):
    counts = [0] * (ncols + 1)
    k = len(rows)
    for i in range(1 << k):
        acc = 0
        for j in range(k):
            if (i >> j) & 1:
                acc ^= rows[j]
        counts[acc.bit_count()] += 1
    return counts


def test_histogram_python_matches_reference():
    rng = random.Random(20)
    for _ in range(10):
        k = rng.randrange(1, 10)
        ncols = rng.randrange(1, 70)
        rows = [rng.getrandbits(ncols) for _ in range(k)]
        got = kpy.weight_histogram_range(rows, ncols, 0, 1 << k)
        assert list(got) == _hist_reference(rows, ncols)


@needs_compiled
def test_histogram_backends_agree():
    rng = random.Random(21)
    for _ in range(10):
        k = rng.randrange(1, 14)
        ncols = rng.randrange(1, 200)
        rows = [rng.getrandbits(ncols) for _ in range(k)]
        a = kpy.weight_histogram_range(rows, ncols, 0, 1 << k)
        b = kc.weight_histogram_range(rows, ncols, 0, 1 << k)
        assert np.array_equal(a, b)


@needs_compiled
def test_histogram_chunks_compose():
    # [lo, hi) ranges must tile the full enumeration
    rng = random.Random(22)
    rows = [rng.getrandbits(40) for _ in range(12)]
    full = kc.weight_histogram_range(rows, 40, 0, 1 << 12)
    parts = sum(
        kc.weight_histogram_range(rows, 40, lo, min(lo + 1000, 1 << 12))
        for lo in range(0, 1 << 12, 1000)
    )
    assert np.array_equal(full, parts)


def test_histogram_threads_match_single(ext6):
    rows = ext6.generator.rows[:22]
    one = kernels.weight_histogram(rows, 64, threads=1)
    many = kernels.weight_histogram(rows, 64, threads=4)
    assert np.array_equal(one, many)


def test_histogram_dimension_cap():
    with pytest.raises(InfeasibleError):
        kernels.weight_histogram([1] * (kernels.BRUTE_DIM_CAP + 1), 64)


# ---------------------------------------------------------------------------
# meet-in-the-middle


def _mitm_reference(cols, w):
    hits = []
    for sub in combinations(range(len(cols)), w):
        if reduce(lambda x, y: x ^ y, (cols[p] for p in sub), 0) == 0:
            hits.append(sub)
    return sorted(hits)


@pytest.mark.parametrize("w", [2, 3, 4, 5, 6])
def test_mitm_matches_reference(w):
    rng = random.Random(30 + w)
    cols = [rng.getrandbits(9) for _ in range(24)]
    got = kernels.mitm_supports(cols, 24, w)
    want = _mitm_reference(cols, w)
    assert [tuple(int(x) for x in row) for row in got] == want


@pytest.mark.parametrize("w", [2, 3, 4, 5])
def test_mitm_backends_agree(w):
    rng = random.Random(40 + w)
    cols = [rng.getrandbits(11) for _ in range(30)]
    cs = np.array(cols, dtype=np.uint64)
    a_sz = w // 2
    b_sz = w - a_sz
    py_rows = kpy.mitm_pairs(cs, a_sz, b_sz)
    py_set = sorted(tuple(int(x) for x in r) for r in py_rows)
    assert py_set == _mitm_reference(cols, w)
    if HAVE_C:
        c_rows = kc.mitm_pairs(cs, a_sz, b_sz)
        c_set = sorted(tuple(int(x) for x in r) for r in c_rows)
        assert c_set == py_set


def test_mitm_first_only():
    rng = random.Random(50)
    cols = [rng.getrandbits(8) for _ in range(26)]
    all_rows = kernels.mitm_supports(cols, 26, 4)
    one = kernels.mitm_supports(cols, 26, 4, first_only=True)
    assert all_rows.shape[0] > 1
    assert one.shape[0] == 1
    assert tuple(one[0]) in {tuple(r) for r in all_rows}


def test_mitm_no_solutions():
    # weight-2 solutions need equal columns; make them all distinct
    cols = list(range(1, 30))
    got = kernels.mitm_supports(cols, 29, 2)
    assert got.shape[0] == 0


def test_mitm_duplicate_columns():
    # repeated columns: every unordered pair of equal columns is a support
    cols = [5, 9, 5, 9, 5]
    got = {tuple(int(x) for x in r) for r in kernels.mitm_supports(cols, 5, 2)}
    assert got == {(0, 2), (0, 4), (2, 4), (1, 3)}


def test_mitm_wide_syndromes_route():
    # syndromes wider than 64 bits take the big-integer path
    rng = random.Random(51)
    cols = [rng.getrandbits(80) for _ in range(18)]
    cols[4] = cols[0] ^ cols[9]          # plant a weight-3 word
    got = kernels.mitm_supports(cols, 18, 3)
    want = _mitm_reference(cols, 3)
    assert (0, 4, 9) in want
    assert [tuple(int(x) for x in r) for r in got] == want


def test_mitm_caps():
    with pytest.raises(InfeasibleError):
        kernels.mitm_supports([1, 2, 3], 3, 9)            # weight cap
    with pytest.raises(InfeasibleError):
        kernels.mitm_supports(
            list(range(100)), 100, 8, max_subsets=10      # subset cap
        )


# ---------------------------------------------------------------------------
# pair coverage


def _coverage_reference(blocks, v):
    counts = [0] * (v * (v - 1) // 2)
    for row in blocks:
        for i, j in combinations(sorted(int(x) for x in row), 2):
            counts[j * (j - 1) // 2 + i] += 1
    return counts


def test_coverage_matches_reference():
    rng = random.Random(60)
    v, k, b = 30, 5, 200
    blocks = np.array(
        [sorted(rng.sample(range(v), k)) for _ in range(b)], dtype=np.uint32
    )
    got = kernels.pair_coverage(blocks, v)
    assert list(got) == _coverage_reference(blocks, v)


@needs_compiled
def test_coverage_backends_agree():
    rng = random.Random(61)
    v, k, b = 50, 6, 500
    blocks = np.array(
        [sorted(rng.sample(range(v), k)) for _ in range(b)], dtype=np.uint32
    )
    a = kpy.pair_coverage_range(blocks, v, 0, b)
    c = kc.pair_coverage_range(blocks, v, 0, b)
    assert np.array_equal(a, c)
    threaded = kernels.pair_coverage(blocks, v, threads=4)
    assert np.array_equal(a, threaded)


# ---------------------------------------------------------------------------
# backend selection


def test_backend_reports_a_lane():
    assert kernels.active_backend() in ("compiled", "python")


def test_force_python_env(monkeypatch, ext6):
    monkeypatch.setenv("STEINERFORGE_FORCE_PYTHON", "1")
    assert kernels.active_backend() == "python"
    rows = ext6.generator.rows[:16]
    forced = kernels.weight_histogram(rows, 64)
    monkeypatch.delenv("STEINERFORGE_FORCE_PYTHON")
    default = kernels.weight_histogram(rows, 64)
    assert np.array_equal(forced, default)


def test_resolve_threads(monkeypatch):
    assert kernels.resolve_threads(3) == 3
    monkeypatch.setenv("STEINERFORGE_THREADS", "5")
    assert kernels.resolve_threads(None) == 5
    monkeypatch.delenv("STEINERFORGE_THREADS")
    assert kernels.resolve_threads(None) >= 1
    with pytest.raises(ValueError):
        kernels.resolve_threads(0)
