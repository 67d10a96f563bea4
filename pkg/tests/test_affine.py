import random

import numpy as np
import pytest

import steinerforge as sf
from steinerforge.errors import CertificationError


# ---------------------------------------------------------------------------
# group structure


def test_group_order_and_enumeration(f4):
    maps = list(sf.all_maps(f4))
    assert len(maps) == sf.group_order(f4) == 16 * 15
    assert len(set(maps)) == len(maps)


def test_compose_inverse_identity(f6):
    rng = random.Random(11)
    ident = sf.identity_map()
    for _ in range(100):
        f = sf.random_map(f6, rng)
        g = sf.random_map(f6, rng)
        x = rng.randrange(64)
        # composition acts correctly
        assert sf.apply_point(f6, sf.compose(f6, f, g), x) == sf.apply_point(
            f6, f, sf.apply_point(f6, g, x)
        )
        # inverse composes to the identity
        assert sf.compose(f6, f, sf.inverse(f6, f)) == ident
        assert sf.compose(f6, sf.inverse(f6, f), f) == ident


def test_sharp_two_transitivity(f5):
    rng = random.Random(12)
    size = 32
    for _ in range(100):
        x1, x2 = rng.sample(range(size), 2)
        y1, y2 = rng.sample(range(size), 2)
        fmap = sf.solve_pair(f5, (x1, x2), (y1, y2))
        assert sf.apply_point(f5, fmap, x1) == y1
        assert sf.apply_point(f5, fmap, x2) == y2
    # uniqueness: the only map fixing two points is the identity
    count = sum(
        1
        for fmap in sf.all_maps(f5)
        if sf.apply_point(f5, fmap, 3) == 3 and sf.apply_point(f5, fmap, 7) == 7
    )
    assert count == 1


def test_affine_map_validation():
    with pytest.raises(ValueError):
        sf.AffineMap(0, 3)
    with pytest.raises(ValueError):
        sf.solve_pair(sf.GF2m(4), (1, 1), (2, 3))


def test_position_permutation_is_permutation(f6):
    rng = random.Random(13)
    for _ in range(20):
        fmap = sf.random_map(f6, rng)
        perm = sf.position_permutation(f6, fmap, 64)
        assert sorted(perm) == list(range(64))
    # identity map gives the identity permutation
    assert sf.position_permutation(f6, sf.identity_map(), 64) == list(range(64))
    # translations move position 0 (the zero element)
    shift = sf.position_permutation(f6, sf.AffineMap(1, 5), 64)
    assert shift[0] != 0


def test_position_permutation_needs_extended_length(f6):
    with pytest.raises(ValueError):
        sf.position_permutation(f6, sf.identity_map(), 63)


# ---------------------------------------------------------------------------
# invariance certification


def test_full_group_certification_m4(f4):
    ce = sf.extend(sf.build_cyclic(f4, [2]))
    report = sf.certify_invariance(f4, ce, mode="full")
    assert report.ok and report.checked == 240


def test_full_group_certification_m5(f5):
    ce = sf.extend(sf.build_cyclic(f5, [1, 2]))
    report = sf.certify_invariance(f5, ce, mode="full")
    assert report.ok and report.checked == 32 * 31


def test_sampled_certification(f6, ext6):
    report = sf.certify_invariance(f6, ext6, mode="sample", samples=50, seed=7)
    assert report.ok and report.checked == 50 and report.mode == "sample"


def test_certification_detects_broken_code(f4):
    # swap two coordinates of the generator matrix; the defining set no
    # longer describes the code, so membership uses the parity check
    ce = sf.extend(sf.build_cyclic(f4, [2]))
    rows = []
    for r in ce.generator.rows:
        b3 = (r >> 3) & 1
        b5 = (r >> 5) & 1
        r &= ~(1 << 3) & ~(1 << 5)
        r |= b3 << 5 | b5 << 3
        rows.append(r)
    gen = sf.BitMatrix(rows, 16).rref()
    broken = sf.LinearCode(
        16, gen.nrows, gen, gen.nullspace_basis(), ce.provenance, defining_set=None
    )
    report = sf.certify_invariance(f4, broken, mode="full")
    assert not report.ok
    assert report.witness is not None
    with pytest.raises(CertificationError):
        sf.require_invariance(f4, broken, mode="full")


def test_invariance_routes_agree(f4):
    # certification through root functionals and through the parity check
    # must agree map by map
    ce = sf.extend(sf.build_cyclic(f4, [2]))
    stripped = sf.LinearCode(
        ce.length, ce.dimension, ce.generator, ce.parity_check,
        ce.provenance, defining_set=None,
    )
    a = sf.certify_invariance(f4, ce, mode="full")
    b = sf.certify_invariance(f4, stripped, mode="full")
    assert a.ok and b.ok and a.checked == b.checked


# ---------------------------------------------------------------------------
# block-system invariance


def test_blocks_invariant_positive(f4):
    ce = sf.extend(sf.build_cyclic(f4, [2]))
    blocks = sf.design_from_code(ce, 4).blocks
    rng = random.Random(14)
    for _ in range(25):
        fmap = sf.random_map(f4, rng)
        assert sf.blocks_invariant_under(f4, fmap, blocks, 16)


def test_blocks_invariant_negative(f4):
    ce = sf.extend(sf.build_cyclic(f4, [2]))
    blocks = sf.design_from_code(ce, 4).blocks.copy()
    tampered = blocks.copy()
    tampered[0] = [0, 1, 2, 3] if list(tampered[0]) != [0, 1, 2, 3] else [0, 1, 2, 4]
    rng = random.Random(15)
    hits = sum(
        sf.blocks_invariant_under(f4, sf.random_map(f4, rng), tampered, 16)
        for _ in range(25)
    )
    assert hits < 25   # a tampered block system cannot survive the whole group
