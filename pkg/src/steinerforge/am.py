"""The Assmus-Mattson criterion for binary codes.

Given the weight distributions of a code and its dual and a target strength
t < d, the criterion asks for s, the number of nonzero dual weights in
1..v-t, to satisfy s <= d - t.  When it holds, the supports of the primal
codewords of each fixed weight in d..w form a t-design, and likewise for
dual weights in d_perp..min(v-t, w_perp), where w (resp. w_perp) caps the
weights whose supports are guaranteed not to repeat.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .weights import WeightDistribution


def largest_w(v: int, q: int, d: int) -> int:
    """The largest w <= v with w - floor((w + q - 2) / (q - 1)) < d.

    This caps the weights whose codewords are guaranteed to have pairwise
    distinct supports.  For binary codes (q = 2) the bracket equals w, the
    condition 0 < d is vacuous, and the scan returns v: a binary codeword
    is determined by its support, so no cap is needed.
    """
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    if d < 1:
        raise ValueError("d must be positive")
    for w in range(v, 0, -1):
        if w - (w + q - 2) // (q - 1) < d:
            return w
    return 0


@dataclass(frozen=True)
class AmReport:
    t: int
    v: int
    d: int
    d_perp: int
    w: int
    w_perp: int
    s: int
    holds: bool
    design_weights: tuple[int, ...]
    dual_design_weights: tuple[int, ...]
    design_lambdas: tuple[int, ...]
    dual_design_lambdas: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "v": self.v,
            "d": self.d,
            "d_perp": self.d_perp,
            "w": self.w,
            "w_perp": self.w_perp,
            "s": self.s,
            "holds": self.holds,
            "design_weights": list(self.design_weights),
            "dual_design_weights": list(self.dual_design_weights),
            "design_lambdas": list(self.design_lambdas),
            "dual_design_lambdas": list(self.dual_design_lambdas),
        }


def _lambda_for(v: int, k: int, t: int, count: int) -> int:
    """lambda implied by b blocks of size k on C(v, t) t-subsets; exact."""
    num = count * comb(k, t)
    den = comb(v, t)
    q, r = divmod(num, den)
    if r:
        raise ValueError(
            f"block count {count} at weight {k} cannot form a {t}-design on {v} points"
        )
    return q


def assmus_mattson(
    wd: WeightDistribution, dual_wd: WeightDistribution, t: int
) -> AmReport:
    """Evaluate the criterion for a primal/dual pair of weight distributions.

    Requires 0 < t < d.  The report carries the design weights on both sides
    (empty when the criterion fails) and, for each listed weight, the design
    parameter lambda implied by the counting identity.
    """
    if wd.length != dual_wd.length:
        raise ValueError("primal and dual lengths differ")
    v = wd.length
    d = wd.min_nonzero_weight()
    d_perp = dual_wd.min_nonzero_weight()
    if d is None or d_perp is None:
        raise ValueError("zero codes have no minimum weight")
    if not 0 < t < d:
        raise ValueError(f"t must satisfy 0 < t < d = {d}")
    w = largest_w(v, 2, d)
    w_perp = largest_w(v, 2, d_perp)
    s = sum(1 for i in range(1, v - t + 1) if dual_wd[i])
    holds = s <= d - t
    design_weights: tuple[int, ...] = ()
    dual_design_weights: tuple[int, ...] = ()
    design_lambdas: tuple[int, ...] = ()
    dual_design_lambdas: tuple[int, ...] = ()
    if holds:
        design_weights = tuple(i for i in range(d, w + 1) if wd[i])
        dual_design_weights = tuple(
            i for i in range(d_perp, min(v - t, w_perp) + 1) if dual_wd[i]
        )
        design_lambdas = tuple(
            _lambda_for(v, k, t, wd[k]) for k in design_weights
        )
        dual_design_lambdas = tuple(
            _lambda_for(v, k, t, dual_wd[k]) for k in dual_design_weights
        )
    return AmReport(
        t=t, v=v, d=d, d_perp=d_perp, w=w, w_perp=w_perp, s=s, holds=holds,
        design_weights=design_weights,
        dual_design_weights=dual_design_weights,
        design_lambdas=design_lambdas,
        dual_design_lambdas=dual_design_lambdas,
    )
