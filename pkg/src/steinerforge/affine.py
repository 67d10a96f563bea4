"""The affine group AGL(1, 2^m) acting on the extended coordinate set:
maps y -> a*y + b (a != 0) over GF(2^m), their action as coordinate
permutations under the zero-then-alpha-powers convention, and certification
that a code (or block system) is invariant under the full group.

The group has order 2^m (2^m - 1) and is sharply 2-transitive: exactly one
map sends any ordered pair of distinct points to any other.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .codes import LinearCode, membership_matrix
from .errors import CertificationError
from .gf2 import GF2m


@dataclass(frozen=True)
class AffineMap:
    """y -> a*y + b over GF(2^m); a must be nonzero."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("affine maps need a != 0")


def identity_map() -> AffineMap:
    return AffineMap(1, 0)


def apply_point(field: GF2m, fmap: AffineMap, x: int) -> int:
    return field.mul(fmap.a, x) ^ fmap.b


def compose(field: GF2m, f: AffineMap, g: AffineMap) -> AffineMap:
    """(f o g)(y) = f(g(y))."""
    return AffineMap(field.mul(f.a, g.a), field.mul(f.a, g.b) ^ f.b)


def inverse(field: GF2m, f: AffineMap) -> AffineMap:
    ai = field.inv(f.a)
    return AffineMap(ai, field.mul(ai, f.b))


def solve_pair(field: GF2m, xs: tuple[int, int], ys: tuple[int, int]) -> AffineMap:
    """The unique map sending (x1, x2) to (y1, y2), pairs distinct
    (sharp 2-transitivity)."""
    x1, x2 = xs
    y1, y2 = ys
    if x1 == x2 or y1 == y2:
        raise ValueError("pairs must consist of distinct points")
    a = field.div(y1 ^ y2, x1 ^ x2)
    b = y1 ^ field.mul(a, x1)
    fmap = AffineMap(a, b)
    if apply_point(field, fmap, x2) != y2:
        raise AssertionError("solve_pair produced an inconsistent map")
    return fmap


def group_order(field: GF2m) -> int:
    return (1 << field.m) * ((1 << field.m) - 1)


def all_maps(field: GF2m) -> Iterator[AffineMap]:
    size = 1 << field.m
    for a in range(1, size):
        for b in range(size):
            yield AffineMap(a, b)


def random_map(field: GF2m, rng: random.Random) -> AffineMap:
    size = 1 << field.m
    return AffineMap(rng.randrange(1, size), rng.randrange(size))


def _pos_to_elem(field: GF2m, p: int) -> int:
    return 0 if p == 0 else field.exp[p - 1]


def _elem_to_pos(field: GF2m, x: int) -> int:
    return 0 if x == 0 else field.log[x] + 1


def position_permutation(field: GF2m, fmap: AffineMap, length: int) -> list[int]:
    """perm[p] = position of the image of position p's field element.
    Only extended-length (2^m) coordinate sets admit the affine action."""
    if length != (1 << field.m):
        raise ValueError("affine maps act on the extended coordinate set of size 2^m")
    return [
        _elem_to_pos(field, apply_point(field, fmap, _pos_to_elem(field, p)))
        for p in range(length)
    ]


@dataclass(frozen=True)
class InvarianceReport:
    ok: bool
    checked: int
    group_order: int
    mode: str
    witness: AffineMap | None = None


def _membership_rows(field: GF2m, code: LinearCode) -> list[int]:
    if code.defining_set is not None:
        return membership_matrix(field, code.defining_set, code.length).rows
    return code.parity_check.rows


def _map_preserves_code(
    gen_rows: list[int], check_rows: list[int], perm: list[int]
) -> bool:
    # sigma(g)[q] = g[sigma^-1(q)], so  h . sigma(g) = (h o sigma) . g
    # where (h o sigma)[p] = h[perm[p]]: permute each check row once, then
    # test every generator row against it.
    length = len(perm)
    for h in check_rows:
        hp = 0
        for p in range(length):
            hp |= ((h >> perm[p]) & 1) << p
        for g in gen_rows:
            if (hp & g).bit_count() & 1:
                return False
    return True


def certify_invariance(
    field: GF2m,
    code: LinearCode,
    mode: str = "full",
    samples: int = 1000,
    seed: int = 0,
) -> InvarianceReport:
    """Check that every affine map (mode "full") or a seeded random sample
    (mode "sample") permutes the code into itself.

    Membership is tested through the code's root-functional matrix when a
    defining set is attached (m rows per coset member instead of n - k
    generic parity rows), falling back to the parity-check matrix.
    """
    if code.length != (1 << field.m):
        raise ValueError("invariance certification applies to extended codes")
    gen_rows = code.generator.rows
    check_rows = _membership_rows(field, code)
    if mode == "full":
        maps: Iterator[AffineMap] = all_maps(field)
        total = group_order(field)
    elif mode == "sample":
        rng = random.Random(seed)
        maps = (random_map(field, rng) for _ in range(samples))
        total = samples
    else:
        raise ValueError(f"unknown mode {mode!r}")
    checked = 0
    for fmap in maps:
        perm = position_permutation(field, fmap, code.length)
        if not _map_preserves_code(gen_rows, check_rows, perm):
            return InvarianceReport(
                ok=False, checked=checked + 1, group_order=group_order(field),
                mode=mode, witness=fmap,
            )
        checked += 1
    return InvarianceReport(
        ok=True, checked=checked, group_order=group_order(field), mode=mode,
    )


def require_invariance(field: GF2m, code: LinearCode, **kwargs) -> InvarianceReport:
    report = certify_invariance(field, code, **kwargs)
    if not report.ok:
        w = report.witness
        raise CertificationError(
            f"affine map y -> {w.a}*y + {w.b} does not preserve the code"
        )
    return report


def blocks_invariant_under(
    field: GF2m, fmap: AffineMap, blocks: np.ndarray, v: int
) -> bool:
    """True iff the permutation induced by the map sends the block multiset
    to itself.  Blocks: (b, k) array of sorted point rows."""
    perm = np.asarray(position_permutation(field, fmap, v), dtype=np.uint32)
    mapped = perm[blocks.astype(np.int64)]
    mapped = np.sort(mapped, axis=1)
    order = np.lexsort(mapped.T[::-1])
    mapped = mapped[order]
    base = blocks.astype(np.uint32)
    border = np.lexsort(base.T[::-1])
    base = base[border]
    return bool(np.array_equal(mapped, base))
