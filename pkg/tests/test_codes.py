import random

import pytest

import steinerforge as sf
from steinerforge.errors import ConsistencyError
from steinerforge.gf2 import poly_degree, poly_mod

from expected_values import GEN_POLY


# ---------------------------------------------------------------------------
# construction


def test_generator_polynomials_frozen():
    for (m, E), want in GEN_POLY.items():
        code = sf.build_cyclic(sf.GF2m(m), E)
        assert code.gen_poly == want, (m, E, hex(code.gen_poly))
        assert code.dimension == (1 << m) - 1 - poly_degree(want)


def test_generator_poly_divides_ambient(f6, code6):
    n = f6.n
    assert poly_mod((1 << n) | 1, code6.gen_poly) == 0


def test_dimension_formula_cases():
    # m even with m/2 in E uses the half-coset size
    c = sf.build_cyclic(sf.GF2m(6), [3])
    assert c.dimension == 63 - (2 * 1 + 1) * 3          # 54
    c = sf.build_cyclic(sf.GF2m(6), [2, 3])
    assert c.dimension == 63 - (2 * 2 + 1) * 3          # 48
    # otherwise each coset is full size m
    c = sf.build_cyclic(sf.GF2m(6), [2])
    assert c.dimension == 63 - 2 * 6                    # 51
    c = sf.build_cyclic(sf.GF2m(5), [1, 2])
    assert c.dimension == 31 - 3 * 5                    # 16


def test_cyclic_code_is_shift_invariant(code6):
    n = code6.length
    rng = random.Random(9)
    for _ in range(30):
        w = 0
        for row in code6.generator.rows:
            if rng.getrandbits(1):
                w ^= row
        shifted = ((w << 1) | (w >> (n - 1))) & ((1 << n) - 1)
        assert code6.contains(shifted)


def test_build_from_defining_set_matches(f6, code6):
    ds = sf.defining_set_for(6, [2])
    other = sf.build_cyclic_from_defining_set(f6, ds)
    assert other.row_space_equal(code6)
    assert other.gen_poly == code6.gen_poly


def test_provenance_roles(f6, code6, ext6, dual_ext6):
    assert code6.provenance.role == "cyclic"
    assert ext6.provenance.role == "extended"
    assert dual_ext6.provenance.role == "extended-dual"
    assert sf.dual(code6).provenance.role == "dual"
    assert sf.dual(dual_ext6).provenance.role == "extended"


# ---------------------------------------------------------------------------
# operations


def test_extend_adds_even_parity(ext6):
    assert ext6.length == 64
    for row in ext6.generator.rows:
        assert row.bit_count() % 2 == 0


def test_extend_defining_set_gains_zero(code6, ext6):
    assert 0 not in code6.defining_set.members
    assert 0 in ext6.defining_set.members
    # 0 was not in the base set, so the marker n is not added
    assert not ext6.defining_set.contains_n


def test_double_extension_rejected(ext6):
    with pytest.raises(ValueError):
        sf.extend(ext6)


def test_dual_dimensions(ext6, dual_ext6):
    assert dual_ext6.dimension == ext6.length - ext6.dimension
    assert dual_ext6.length == ext6.length
    # dual of dual has the same row space
    back = sf.dual(dual_ext6)
    assert back.row_space_equal(ext6)


def test_puncture_inverts_extension(code6, ext6):
    punctured = sf.puncture(ext6, 0)
    assert punctured.length == code6.length
    assert punctured.row_space_equal(code6)


def test_orthogonality_enforced(f6, code6):
    bad = sf.BitMatrix([1], code6.length)   # weight-1 row cannot be orthogonal
    with pytest.raises(ConsistencyError):
        sf.LinearCode(
            code6.length, code6.dimension, code6.generator, bad, code6.provenance
        )


# ---------------------------------------------------------------------------
# membership by root functionals


def test_power_sum_basics(f4):
    n = f4.n
    # the all-ones cyclic word: sum of alpha^(i*s) over all i is 0 for s != 0
    all_ones = (1 << n) - 1
    for s in range(1, n):
        assert sf.power_sum(f4, all_ones, s, n) == 0
    assert sf.power_sum(f4, all_ones, 0, n) == n % 2
    # extended all-ones: one more term (0^s = 0, 0^0 = 1)
    all_ones_ext = (1 << (n + 1)) - 1
    assert sf.power_sum(f4, all_ones_ext, 0, n + 1) == (n + 1) % 2
    for s in range(1, n):
        assert sf.power_sum(f4, all_ones_ext, s, n + 1) == 0


def test_power_sum_single_positions(f6):
    n = f6.n
    for p in [0, 1, 7]:
        for s in [0, 1, 5, n]:
            got = sf.power_sum(f6, 1 << p, s, n)
            assert got == f6.pow(f6.exp[p], s)
    # extended indexing: position 0 is the zero element
    assert sf.power_sum(f6, 1, 0, n + 1) == 1
    assert sf.power_sum(f6, 1, 3, n + 1) == 0
    assert sf.power_sum(f6, 2, 3, n + 1) == f6.pow(f6.exp[0], 3)


def test_membership_routes_agree(f6, ext6):
    rng = random.Random(10)
    ds = ext6.defining_set
    mat = sf.membership_matrix(f6, ds, ext6.length)
    assert mat.nrows == ext6.length - ext6.dimension
    for _ in range(300):
        if rng.getrandbits(1):
            w = rng.getrandbits(ext6.length)
        else:
            w = 0
            for row in ext6.generator.rows:
                if rng.getrandbits(1):
                    w ^= row
        via_check = ext6.contains(w)
        via_roots = sf.membership_by_defining_set(f6, ds, w, ext6.length)
        via_matrix = all((r & w).bit_count() % 2 == 0 for r in mat.rows)
        assert via_check == via_roots == via_matrix


def test_membership_matrix_row_space(f6, ext6):
    mat = sf.membership_matrix(f6, ext6.defining_set, ext6.length)
    assert mat.row_space_equal(ext6.parity_check)


# ---------------------------------------------------------------------------
# minimum distance


def test_min_distance_small_codes():
    from math import gcd
    for m, e in [(4, 1), (4, 2), (5, 2), (6, 2), (6, 3)]:
        f = sf.GF2m(m)
        c = sf.build_cyclic(f, [e])
        ce = sf.extend(c)
        want = 3 if gcd(e, m) > 1 else 5
        r = sf.min_distance(c)
        re_ = sf.min_distance(ce)
        assert (r.value, r.exact) == (want, True)
        assert (re_.value, re_.exact) == (want + 1, True)


def test_min_distance_witness_large_code(f6):
    # dimension 51 exceeds the exhaustive cap, so the search route runs
    ce = sf.extend(sf.build_cyclic(f6, [2]))
    r = sf.min_distance(ce)
    assert r.value == 4 and r.exact
    assert r.witness is not None and len(r.witness) == 4
    word = 0
    for p in r.witness:
        word |= 1 << p
    assert ce.contains(word)


def test_min_distance_even_code_skips_odd_weights(f6):
    ce = sf.extend(sf.build_cyclic(f6, [1]))   # [64, 45], distance 6
    r = sf.min_distance(ce)
    assert r.value == 6 and r.exact
    assert r.witness is not None and len(r.witness) == 6


def test_min_distance_m5_pair(f5):
    c = sf.build_cyclic(f5, [1, 2])      # [31, 16], distance 7
    r = sf.min_distance(c)
    assert (r.value, r.exact) == (7, True)
    ce = sf.extend(c)                    # [32, 16], distance 8
    re_ = sf.min_distance(ce)
    assert (re_.value, re_.exact) == (8, True)


# ---------------------------------------------------------------------------
# serialization


def test_save_load_roundtrip(tmp_path, ext6):
    prefix = str(tmp_path / "code")
    json_path, blob_path = sf.save_code(ext6, prefix)
    loaded = sf.load_code(json_path)
    assert loaded.generator == ext6.generator
    assert loaded.length == ext6.length and loaded.dimension == ext6.dimension
    assert loaded.defining_set == ext6.defining_set
    assert loaded.provenance == ext6.provenance
    assert loaded.gen_poly == ext6.gen_poly


def test_load_detects_tampering(tmp_path, ext6):
    prefix = str(tmp_path / "code")
    json_path, blob_path = sf.save_code(ext6, prefix)
    blob = bytearray(open(blob_path, "rb").read())
    blob[3] ^= 0x40
    with open(blob_path, "wb") as f:
        f.write(bytes(blob))
    with pytest.raises(ConsistencyError):
        sf.load_code(json_path)


def test_load_rejects_unknown_format(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"format": "something-else"}')
    with pytest.raises(ValueError):
        sf.load_code(str(p))
