"""Weight distributions: exact enumeration, the MacWilliams transform, and
closed forms for the code families built by this package.

All arithmetic is exact (Python ints); every closed form cross-checks its
own total against 2^dimension before returning.
"""
from __future__ import annotations

from math import comb, gcd

from . import kernels
from .codes import LinearCode
from .errors import ConsistencyError


class WeightDistribution:
    """Counts A_0..A_n of codewords per Hamming weight."""

    __slots__ = ("length", "counts")

    def __init__(self, length: int, counts):
        counts = [int(c) for c in counts]
        if len(counts) != length + 1:
            raise ValueError("need exactly length + 1 counts")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be nonnegative")
        self.length = length
        self.counts = counts

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightDistribution)
            and self.length == other.length
            and self.counts == other.counts
        )

    def __repr__(self):
        return f"WeightDistribution({self.length}, {self.nonzero()})"

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def min_nonzero_weight(self) -> int | None:
        for i in range(1, self.length + 1):
            if self.counts[i]:
                return i
        return None

    def moment(self, r: int) -> int:
        """Power moment sum of i^r * A_i (0^0 = 1)."""
        return sum(i ** r * c for i, c in enumerate(self.counts))

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "counts": {str(i): str(c) for i, c in enumerate(self.counts) if c},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightDistribution":
        length = int(data["length"])
        counts = [0] * (length + 1)
        for key, val in data["counts"].items():
            counts[int(key)] = int(val)
        return cls(length, counts)

    @classmethod
    def from_pairs(cls, length: int, pairs) -> "WeightDistribution":
        counts = [0] * (length + 1)
        for w, c in dict(pairs).items():
            counts[w] += c
        return cls(length, counts)


def brute_weight_distribution(code: LinearCode, threads: int = 1) -> WeightDistribution:
    """Exact distribution by enumerating all 2^k codewords (Gray-code walk)."""
    hist = kernels.weight_histogram(code.generator.rows, code.length, threads=threads)
    counts = [int(c) for c in hist]
    if sum(counts) != 1 << code.dimension:
        raise ConsistencyError("enumerated codeword count is not 2^dimension")
    return WeightDistribution(code.length, counts)


def macwilliams_transform(wd: WeightDistribution, dimension: int) -> WeightDistribution:
    """Dual weight distribution, exactly:
    B(z) = 2^-k * sum_i A_i (1-z)^i (1+z)^(v-i).

    The polynomial (1-z)^i (1+z)^(v-i) is updated incrementally between
    weights (divide by 1+z, multiply by 1-z), so the whole transform is
    O(v^2) big-int operations.  Divisibility by 2^k is checked, making the
    transform a structural test of its input.
    """
    v = wd.length
    if not 0 <= dimension <= v:
        raise ValueError("dimension out of range")
    if wd.counts[0] != 1:
        raise ConsistencyError("weight distribution must have A_0 = 1")
    if wd.total() != 1 << dimension:
        raise ConsistencyError(
            f"total {wd.total()} does not match 2^{dimension}"
        )
    cur = [comb(v, t) for t in range(v + 1)]  # (1+z)^v
    acc = [0] * (v + 1)
    for i in range(v + 1):
        a = wd.counts[i]
        if a:
            for t in range(v + 1):
                if cur[t]:
                    acc[t] += a * cur[t]
        if i < v:
            # cur holds (1-z)^i (1+z)^(v-i); step i -> i+1 in place.
            prev = 0
            for t in range(v):  # divide by (1+z): degree v-1
                cur[t] -= prev
                prev = cur[t]
            if cur[v] != prev:
                raise ConsistencyError("inexact division while updating the kernel")
            cur[v] = -prev  # multiply by (1-z), top coefficient
            for t in range(v - 1, 0, -1):
                cur[t] -= cur[t - 1]
    scale = 1 << dimension
    out = []
    for t, val in enumerate(acc):
        q, r = divmod(val, scale)
        if r:
            raise ConsistencyError(
                f"transform coefficient at weight {t} is not divisible by 2^{dimension}"
            )
        if q < 0:
            raise ConsistencyError(f"negative dual count at weight {t}")
        out.append(q)
    return WeightDistribution(v, out)


def power_moment_check(
    wd: WeightDistribution, dual_wd: WeightDistribution, dimension: int, orders: int = 5
) -> bool:
    """Cross-validate a primal/dual pair: the dual's MacWilliams image must
    reproduce the primal's first few power moments (and vice versa)."""
    if wd.length != dual_wd.length:
        raise ValueError("length mismatch")
    implied = macwilliams_transform(dual_wd, wd.length - dimension)
    return all(wd.moment(r) == implied.moment(r) for r in range(orders))


# ---------------------------------------------------------------------------
# closed forms


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def _dual_counts_odd_quotient(m: int, g: int, extended: bool):
    """m/g odd: 3 nonzero weights (5 extended), dual dimension 2m (2m+1)."""
    h = (m - g) // 2
    n = (1 << m) - 1
    w0 = 1 << (m - 1)
    delta = 1 << (m - 1 - h)
    if not extended:
        pairs = {
            0: 1,
            w0 - delta: n * ((1 << h) + 1) * (1 << (h - 1)),
            w0: n * ((1 << m) - (1 << (2 * h)) + 1),
            w0 + delta: n * ((1 << h) - 1) * (1 << (h - 1)),
        }
        return pairs, n, 2 * m
    pairs = {
        0: 1,
        w0 - delta: n << (2 * h),
        w0: n * ((1 << (m + 1)) - (1 << (2 * h + 1)) + 2),
        w0 + delta: n << (2 * h),
        1 << m: 1,
    }
    return pairs, n + 1, 2 * m + 1


def _dual_counts_half_exponent(m: int, extended: bool):
    """e = m/2: 3 nonzero weights (5 extended), dual dimension 3m/2 (1+3m/2)."""
    n = (1 << m) - 1
    w0 = 1 << (m - 1)
    delta = 1 << ((m - 2) // 2)
    half = 1 << (m // 2)
    if not extended:
        pairs = {
            0: 1,
            w0 - delta: (half - 1) * (w0 + delta),
            w0: n,
            w0 + delta: (half - 1) * (w0 - delta),
        }
        return pairs, n, 3 * m // 2
    pairs = {
        0: 1,
        w0 - delta: (half - 1) << m,
        w0: (1 << (m + 1)) - 2,
        w0 + delta: (half - 1) << m,
        1 << m: 1,
    }
    return pairs, n + 1, 1 + 3 * m // 2


def _dual_counts_even_quotient(m: int, g: int, extended: bool):
    """m/g even with e < m/2: 5 nonzero weights (7 extended), parameterised
    by l = 2 gcd(m, e); dual dimension 2m (2m+1)."""
    l = 2 * g
    n = (1 << m) - 1
    w0 = 1 << (m - 1)
    d_big = 1 << ((m + l - 2) // 2)
    d_sml = 1 << ((m - 2) // 2)
    den = (1 << (l // 2)) + 1
    if not extended:
        pairs = {
            0: 1,
            w0 - d_big: _exact_div(
                (1 << ((m - l - 2) // 2)) * ((1 << ((m - l) // 2)) + 1) * n,
                den, "outer low count",
            ),
            w0 - d_sml: _exact_div(
                (1 << ((m + l - 2) // 2)) * ((1 << (m // 2)) + 1) * n,
                den, "inner low count",
            ),
            w0: (((1 << (l // 2)) - 1) * (1 << (m - l)) + 1) * n,
            w0 + d_sml: _exact_div(
                (1 << ((m + l - 2) // 2)) * ((1 << (m // 2)) - 1) * n,
                den, "inner high count",
            ),
            w0 + d_big: _exact_div(
                (1 << ((m - l - 2) // 2)) * ((1 << ((m - l) // 2)) - 1) * n,
                den, "outer high count",
            ),
        }
        return pairs, n, 2 * m
    pairs = {
        0: 1,
        w0 - d_big: _exact_div((1 << (m - l)) * n, den, "outer count"),
        w0 - d_sml: _exact_div((1 << ((2 * m + l) // 2)) * n, den, "inner low count"),
        w0: 2 * (((1 << (l // 2)) - 1) * (1 << (m - l)) + 1) * n,
        w0 + d_sml: _exact_div((1 << ((2 * m + l) // 2)) * n, den, "inner high count"),
        w0 + d_big: _exact_div((1 << (m - l)) * n, den, "outer count"),
        1 << m: 1,
    }
    return pairs, n + 1, 2 * m + 1


def closed_form_dual_wd(m: int, e: int, extended: bool = False) -> WeightDistribution:
    """Dual weight distribution of the two-coset code (E = {e}), or of its
    extension, in closed form.  The case split is driven by gcd(m, e):

    - m/gcd odd: three nonzero dual weights (five for the extension);
    - e = m/2:   three nonzero dual weights, different counts;
    - m/gcd even, e < m/2: five nonzero dual weights (seven extended).

    Totals are verified against 2^dimension.
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    if not 1 <= e <= m // 2:
        raise ValueError(f"e must lie in 1..{m // 2}")
    g = gcd(m, e)
    if (m // g) % 2 == 1:
        pairs, length, dim = _dual_counts_odd_quotient(m, g, extended)
    elif 2 * e == m:
        pairs, length, dim = _dual_counts_half_exponent(m, extended)
    else:
        pairs, length, dim = _dual_counts_even_quotient(m, g, extended)
    wd = WeightDistribution.from_pairs(length, pairs)
    if wd.total() != 1 << dim:
        raise ConsistencyError(
            f"closed-form total {wd.total()} != 2^{dim} for m={m}, e={e}, "
            f"extended={extended}"
        )
    return wd


def _signed_binomial_product(a: int, b: int) -> list[int]:
    """Coefficients of (1-z)^a (1+z)^b, exactly; degree a+b."""
    if a > b:
        base = _signed_binomial_product(b, a)
        return [c if t % 2 == 0 else -c for t, c in enumerate(base)]
    # (1-z)^a (1+z)^b = (1-z^2)^a (1+z)^(b-a)
    even = [0] * (a + b + 1)
    for t in range(a + 1):
        even[2 * t] = (-1) ** t * comb(a, t)
    diff = b - a
    if diff == 0:
        return even
    binom = [comb(diff, j) for j in range(diff + 1)]
    out = [0] * (a + b + 1)
    for s2 in range(0, 2 * a + 1, 2):
        c = even[s2]
        if not c:
            continue
        for j, bj in enumerate(binom):
            out[s2 + j] += c * bj
    return out


def extended_primal_wd_closed_form(m: int) -> WeightDistribution:
    """Weight distribution of the extended two-coset code for the case where
    gcd(m, e) = 2 with m/2 odd (so m = 2 mod 4, any valid even e): the dual
    has three nonzero weights 2^(m-1), 2^(m-1) +- 2^(m/2), and the inverse
    MacWilliams transform collapses to one binomial-sum formula per weight.

    Odd weights are 0; for even k,

      A_k = [ 2 C(2^m, k)
              + (-1)^(k/2) C(2^(m-1), k/2) (2^m - 1)(2^(m+1) - 2^(m-1) + 2)
              + 2 (2^m - 1) 2^(m-2) Q_k ] / 2^(2m+1),

    where Q is the coefficient list of (1-z)^(2^(m-1) - 2^(m/2))
    (1+z)^(2^(m-1) + 2^(m/2)).
    """
    if m < 6 or m % 4 != 2:
        raise ValueError("closed form applies for m = 2 (mod 4), m >= 6")
    big_n = 1 << m
    n = big_n - 1
    u2 = 2 * n * (1 << (m - 2))
    c2 = n * ((1 << (m + 1)) - (1 << (m - 1)) + 2)
    w_low = (1 << (m - 1)) - (1 << (m // 2))
    w_high = (1 << (m - 1)) + (1 << (m // 2))
    q_coeffs = _signed_binomial_product(w_low, w_high)
    denom = 1 << (2 * m + 1)
    counts = [0] * (big_n + 1)
    for k2 in range(0, big_n + 1, 2):
        val = (
            2 * comb(big_n, k2)
            + (-1) ** (k2 // 2) * comb(big_n // 2, k2 // 2) * c2
            + u2 * q_coeffs[k2]
        )
        counts[k2] = _exact_div(val, denom, f"primal count at weight {k2}")
        if counts[k2] < 0:
            raise ConsistencyError(f"negative count at weight {k2}")
    wd = WeightDistribution(big_n, counts)
    dim = big_n - 1 - 2 * m
    if wd.total() != 1 << dim:
        raise ConsistencyError(f"closed-form total {wd.total()} != 2^{dim} for m={m}")
    return wd
