"""Combinatorial designs from codeword supports: enumeration of fixed-weight
codewords, t-design verification by exhaustive coverage counting, Steiner
classification, and block/certificate file formats.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt

import numpy as np

from . import kernels
from .codes import LinearCode, column_syndromes
from .errors import CertificationError, ConsistencyError, InfeasibleError

# cap on comb(v, t) for coverage counting (flat count array size)
COVERAGE_INDEX_CAP = 1 << 28


@dataclass(frozen=True)
class DesignCertificate:
    t: int
    lam: int
    b: int


@dataclass
class DesignInstance:
    """A block system: b sorted k-subsets of {0..v-1}, lexicographically
    ordered, as a (b, k) uint32 array."""

    v: int
    k: int
    blocks: np.ndarray
    certificate: DesignCertificate | None = None

    def __post_init__(self):
        blocks = np.ascontiguousarray(self.blocks, dtype=np.uint32)
        if blocks.ndim != 2:
            raise ValueError("blocks must be a 2-d array")
        if blocks.shape[1] != self.k:
            raise ValueError("block width does not match k")
        if blocks.size:
            if int(blocks.max()) >= self.v:
                raise ValueError("point out of range")
            if np.any(np.diff(blocks.astype(np.int64), axis=1) <= 0):
                raise ValueError("blocks must be strictly increasing")
        self.blocks = blocks

    @property
    def b(self) -> int:
        return int(self.blocks.shape[0])

    def is_steiner(self) -> bool:
        """True iff certified as a t-design with t >= 2 and lambda = 1."""
        c = self.certificate
        return c is not None and c.t >= 2 and c.lam == 1


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of exhaustive t-subset coverage counting."""

    ok: bool
    t: int
    b: int
    lam: int | None = None
    witness_low: tuple[tuple[int, ...], int] | None = None
    witness_high: tuple[tuple[int, ...], int] | None = None


def block_count(v: int, k: int, t: int, lam: int) -> int:
    """b = lambda * C(v, t) / C(k, t); raises if not integral."""
    num = lam * comb(v, t)
    den = comb(k, t)
    q, r = divmod(num, den)
    if r:
        raise ValueError(
            f"no design with these parameters: {num} is not divisible by {den}"
        )
    return q


def _supports_from_masks(masks: list[int], w: int) -> np.ndarray:
    out = np.empty((len(masks), w), dtype=np.uint32)
    for r, mask in enumerate(masks):
        rest = mask
        for c in range(w):
            p = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            out[r, c] = p
        if rest:
            raise ConsistencyError("mask weight larger than expected")
    return out


def _exhaustive_fixed_weight(rows: list[int], w: int) -> list[int]:
    masks = []
    acc = 0
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        if acc.bit_count() == w:
            masks.append(acc)
    return masks


def enumerate_weight_w(
    code: LinearCode,
    w: int,
    mode: str = "auto",
    threads: int = 1,
    max_subsets: int = kernels.MITM_SUBSET_CAP,
) -> np.ndarray:
    """All supports of weight-w codewords as a sorted (count, w) uint32 array.

    mode "exhaustive" walks all 2^k codewords (dimension-capped);
    mode "mitm" meets in the middle over parity-check syndromes (w-capped);
    "auto" picks exhaustive for small dimension, else meet-in-the-middle.
    Results are certified complete for the chosen route - on overflow the
    call raises rather than returning a partial list.
    """
    if not 1 <= w <= code.length:
        raise ValueError("w out of range")
    if mode == "auto":
        if code.dimension <= 20 or w > kernels.MITM_WEIGHT_CAP:
            mode = "exhaustive"
        else:
            mode = "mitm"
    if mode == "exhaustive":
        if code.dimension > kernels.BRUTE_DIM_CAP:
            raise InfeasibleError(
                f"exhaustive enumeration needs dimension <= {kernels.BRUTE_DIM_CAP}, "
                f"got {code.dimension}"
            )
        supports = _supports_from_masks(
            _exhaustive_fixed_weight(code.generator.rows, w), w
        )
        if supports.shape[0]:
            order = np.lexsort(supports.T[::-1])
            supports = supports[order]
    elif mode == "mitm":
        cols = column_syndromes(code.parity_check)
        if w == 1:
            hits = [j for j, s in enumerate(cols) if s == 0]
            supports = np.array(hits, dtype=np.uint32).reshape(-1, 1)
        else:
            supports = kernels.mitm_supports(
                cols, code.length, w, max_subsets=max_subsets
            ).astype(np.uint32)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if supports.shape[0] > 1:
        same = np.all(supports[1:] == supports[:-1], axis=1)
        if bool(same.any()):
            raise ConsistencyError("duplicate supports in enumeration")
    return supports


def design_from_code(
    code: LinearCode, w: int, mode: str = "auto", threads: int = 1
) -> DesignInstance:
    """Blocks = supports of the weight-w codewords."""
    blocks = enumerate_weight_w(code, w, mode=mode, threads=threads)
    if blocks.shape[0] == 0:
        raise ValueError(f"the code has no codewords of weight {w}")
    return DesignInstance(v=code.length, k=w, blocks=blocks)


def _pair_unrank(flat: int) -> tuple[int, int]:
    # flat = j*(j-1)/2 + i with i < j
    j = (1 + isqrt(1 + 8 * flat)) // 2
    while j * (j - 1) // 2 > flat:
        j -= 1
    i = flat - j * (j - 1) // 2
    return i, j


def _subset_rank(points) -> int:
    # combinadic rank of a strictly increasing tuple
    return sum(comb(p, s + 1) for s, p in enumerate(points))


def _subset_unrank(flat: int, t: int) -> tuple[int, ...]:
    # inverse of _subset_rank: greedy from the largest element down
    out = []
    rest = flat
    for s in range(t, 0, -1):
        c = s - 1
        while comb(c + 1, s) <= rest:
            c += 1
        out.append(c)
        rest -= comb(c, s)
    return tuple(reversed(out))


def verify_t_design(design: DesignInstance, t: int, threads: int = 1) -> CoverageReport:
    """Count, exhaustively, how many blocks contain each t-subset of points.

    Returns a report with the common count lambda on success, or the least-
    and most-covered witness subsets on failure.  t = 2 runs on the bit
    kernels; general t uses combinadic ranking.
    """
    v, k, blocks = design.v, design.k, design.blocks
    if not 1 <= t <= k:
        raise ValueError("need 1 <= t <= k")
    if blocks.shape[0] == 0:
        raise ValueError("empty block list")
    if comb(v, t) > COVERAGE_INDEX_CAP:
        raise InfeasibleError(
            f"coverage table C({v},{t}) exceeds the {COVERAGE_INDEX_CAP} cap"
        )
    if t == 2:
        counts = kernels.pair_coverage(blocks, v, threads=threads)
    else:
        counts = np.zeros(comb(v, t), dtype=np.int64)
        for row in blocks:
            pts = [int(x) for x in row]
            for sub in combinations(pts, t):
                counts[_subset_rank(sub)] += 1
    lo = int(counts.min())
    hi = int(counts.max())
    b = int(blocks.shape[0])
    if lo == hi:
        lam = lo
        if b * comb(k, t) != lam * comb(v, t):
            raise ConsistencyError("uniform coverage fails the counting identity")
        return CoverageReport(ok=True, t=t, b=b, lam=lam)
    lo_flat = int(counts.argmin())
    hi_flat = int(counts.argmax())
    if t == 2:
        lo_sub: tuple[int, ...] = _pair_unrank(lo_flat)
        hi_sub: tuple[int, ...] = _pair_unrank(hi_flat)
    else:
        lo_sub = _subset_unrank(lo_flat, t)
        hi_sub = _subset_unrank(hi_flat, t)
    return CoverageReport(
        ok=False, t=t, b=b,
        witness_low=(lo_sub, lo), witness_high=(hi_sub, hi),
    )


def certify(design: DesignInstance, t: int, threads: int = 1) -> DesignCertificate:
    """Verify and attach a certificate; raises CertificationError on failure."""
    report = verify_t_design(design, t, threads=threads)
    if not report.ok:
        raise CertificationError(
            f"not a {t}-design: subset {report.witness_low[0]} is covered "
            f"{report.witness_low[1]} times but {report.witness_high[0]} is "
            f"covered {report.witness_high[1]} times"
        )
    cert = DesignCertificate(t=t, lam=report.lam, b=report.b)
    design.certificate = cert
    return cert


def steiner_admissible_v(k: int, v: int) -> bool:
    """Necessary (and for k = 4 sufficient) congruence for an S(2, k, v):
    with k = 4 a system exists iff v = 1 or 4 (mod 12)."""
    if k == 4:
        return v % 12 in (1, 4)
    lam = 1
    return (
        (lam * (v - 1)) % (k - 1) == 0
        and (lam * v * (v - 1)) % (k * (k - 1)) == 0
    )


def steiner_check(design: DesignInstance) -> bool:
    """True iff the attached certificate shows a Steiner system (lambda = 1,
    t >= 2).  For S(2, 4, v) the admissible-v congruence is also asserted."""
    if design.certificate is None:
        raise ValueError("design has no certificate; run certify() first")
    c = design.certificate
    if c.t < 2 or c.lam != 1:
        return False
    if c.t == 2 and not steiner_admissible_v(design.k, design.v):
        raise ConsistencyError(
            f"certified S(2,{design.k},{design.v}) violates the existence congruence"
        )
    return True


# ---------------------------------------------------------------------------
# file formats


def save_blocks(design: DesignInstance, path: str, source: str = "unknown") -> str:
    """One line per block, space-separated ascending points, with a
    `#design v=.. k=.. source=..` header."""
    with open(path, "w") as f:
        f.write(f"#design v={design.v} k={design.k} source={source}\n")
        for row in design.blocks:
            f.write(" ".join(str(int(x)) for x in row) + "\n")
    return path


def load_blocks(path: str) -> DesignInstance:
    with open(path) as f:
        header = f.readline().strip()
        if not header.startswith("#design "):
            raise ValueError("missing #design header line")
        fields = dict(
            part.split("=", 1) for part in header[len("#design "):].split() if "=" in part
        )
        v = int(fields["v"])
        k = int(fields["k"])
        rows = []
        for lineno, line in enumerate(f, start=2):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            points = [int(x) for x in line.split()]
            if len(points) != k:
                raise ValueError(f"line {lineno}: expected {k} points")
            rows.append(points)
    blocks = np.array(rows, dtype=np.uint32).reshape(len(rows), k)
    if blocks.shape[0] > 1:
        order = np.lexsort(blocks.T[::-1])
        blocks = blocks[order]
    return DesignInstance(v=v, k=k, blocks=blocks)


def save_certificate(design: DesignInstance, path: str) -> str:
    """JSON summary of a certified design (deterministic key order)."""
    if design.certificate is None:
        raise ValueError("design has no certificate; run certify() first")
    c = design.certificate
    payload = {
        "v": design.v,
        "k": design.k,
        "t": c.t,
        "lambda": c.lam,
        "b": c.b,
        "steiner": design.is_steiner(),
    }
    with open(path, "w") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    return path
