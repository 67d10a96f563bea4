"""Binary linear codes: cyclic construction from defining sets, extension,
duality, root-functional membership, bounded minimum-distance certification,
and file serialization.

Coordinate conventions
----------------------
A length-n cyclic code (n = 2^m - 1) indexes coordinate i by the field
element alpha^i.  Its extension by an overall parity bit uses the
"zero-then-alpha-powers" convention: position 0 corresponds to the field
element 0 and position j (1 <= j <= n) to alpha^(j-1).  Codewords are ints
with bit j = coordinate j.
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, replace

from . import kernels
from .cyclotomic import DefiningSet, defining_set_for
from .errors import ConsistencyError, InfeasibleError
from .gf2 import (
    BitMatrix,
    GF2m,
    minimal_polynomial,
    poly_degree,
    poly_lcm,
    poly_mod,
)

CONVENTION = "zero-then-alpha-powers"

CODE_FORMAT = "steinerforge-code-v1"


@dataclass(frozen=True)
class Provenance:
    """How a code was constructed: base parameters plus the op chain."""

    m: int
    E: tuple[int, ...] | None
    ops: tuple[str, ...]
    modulus: int
    convention: str = CONVENTION

    @property
    def role(self) -> str:
        named = {
            ("cyclic",): "cyclic",
            ("cyclic", "dual"): "dual",
            ("cyclic", "extend"): "extended",
            ("cyclic", "extend", "dual"): "extended-dual",
        }
        return named.get(self.ops, "-".join(self.ops))


@dataclass
class LinearCode:
    """A binary linear code with canonical (reduced row-echelon) matrices."""

    length: int
    dimension: int
    generator: BitMatrix
    parity_check: BitMatrix
    provenance: Provenance
    defining_set: DefiningSet | None = None
    gen_poly: int | None = None

    def __post_init__(self):
        g, h = self.generator, self.parity_check
        if g.ncols != self.length or h.ncols != self.length:
            raise ConsistencyError("matrix widths do not match the code length")
        if g.nrows != self.dimension or h.nrows != self.length - self.dimension:
            raise ConsistencyError("matrix row counts do not match the dimension")
        for hr in h.rows:
            for gr in g.rows:
                if (gr & hr).bit_count() & 1:
                    raise ConsistencyError("generator and parity-check are not orthogonal")

    def contains(self, word: int) -> bool:
        """Membership via the parity-check matrix."""
        if word < 0 or word >> self.length:
            raise ValueError("word outside the coordinate range")
        return all((row & word).bit_count() % 2 == 0 for row in self.parity_check.rows)

    def row_space_equal(self, other: "LinearCode") -> bool:
        return self.generator.row_space_equal(other.generator)

    def __repr__(self):
        return (
            f"LinearCode([{self.length}, {self.dimension}], role={self.provenance.role})"
        )


def _cyclic_from_generator_poly(field: GF2m, g: int, ds: DefiningSet, E, ops=("cyclic",)):
    n = field.n
    deg = poly_degree(g)
    k = n - deg
    if k <= 0:
        raise ValueError("defining set leaves no dimension")
    xn1 = (1 << n) | 1
    if poly_mod(xn1, g) != 0:
        raise ConsistencyError("generator polynomial does not divide x^n - 1")
    gen = BitMatrix([g << i for i in range(k)], n).rref()
    par = gen.nullspace_basis()
    prov = Provenance(m=field.m, E=E, ops=tuple(ops), modulus=field.modulus)
    return LinearCode(n, k, gen, par, prov, defining_set=ds, gen_poly=g)


def build_cyclic_from_defining_set(field: GF2m, ds: DefiningSet) -> LinearCode:
    """Cyclic code whose roots are alpha^s for every s in the defining set.

    Low-level constructor: the set must be a plain union of cosets mod n
    (no extension marker n) over the same n as the field.
    """
    if ds.n != field.n:
        raise ValueError("defining set and field disagree on n")
    if ds.contains_n:
        raise ValueError("a cyclic defining set cannot contain the marker n")
    g = 1
    for leader in ds.leaders:
        g = poly_lcm(g, minimal_polynomial(field, leader))
    return _cyclic_from_generator_poly(field, g, ds, E=None)


def build_cyclic(field: GF2m, E) -> LinearCode:
    """The cyclic code of length 2^m - 1 with defining set joining the coset
    of 1 and the cosets of 1 + 2^e for e in E (nonempty, within 1..m/2).

    The dimension is certified against the closed form
    n - (2|E|+1)m/2 when m is even with m/2 in E, else n - (|E|+1)m.
    """
    E = tuple(sorted(set(int(e) for e in E)))
    ds = defining_set_for(field.m, E)
    code = build_cyclic_from_defining_set(field, ds)
    code.provenance = replace(code.provenance, E=E)
    m, n, s = field.m, field.n, len(E)
    if m % 2 == 0 and (m // 2) in E:
        expected = n - (2 * s + 1) * m // 2
    else:
        expected = n - (s + 1) * m
    if code.dimension != expected:
        raise ConsistencyError(
            f"dimension {code.dimension} does not match the closed form {expected} "
            f"for m={m}, E={E}"
        )
    return code


def extend(code: LinearCode) -> LinearCode:
    """Append an overall parity coordinate at position 0."""
    ops = code.provenance.ops
    if ops and ops[-1] == "extend":
        raise ValueError("code is already extended")
    n1 = code.length + 1
    gen = BitMatrix(
        [(r.bit_count() & 1) | (r << 1) for r in code.generator.rows], n1
    ).rref()
    par = BitMatrix(
        [(1 << n1) - 1] + [r << 1 for r in code.parity_check.rows], n1
    ).rref()
    ds = None
    if code.defining_set is not None:
        members = set(code.defining_set.members)
        if 0 in members:
            members.add(code.defining_set.n)
        members.add(0)
        ds = DefiningSet(n=code.defining_set.n, members=tuple(sorted(members)))
    prov = replace(code.provenance, ops=ops + ("extend",))
    return LinearCode(n1, code.dimension, gen, par, prov, defining_set=ds)


def dual(code: LinearCode) -> LinearCode:
    """Swap generator and parity-check (double dual collapses in provenance;
    the defining set and generator polynomial are not carried across)."""
    ops = code.provenance.ops
    new_ops = ops[:-1] if ops and ops[-1] == "dual" else ops + ("dual",)
    prov = replace(code.provenance, ops=new_ops)
    return LinearCode(
        code.length,
        code.length - code.dimension,
        code.parity_check.copy(),
        code.generator.copy(),
        prov,
    )


def puncture(code: LinearCode, position: int = 0) -> LinearCode:
    """Delete one coordinate (analysis helper, partial inverse of extend)."""
    if not 0 <= position < code.length:
        raise ValueError("position out of range")
    low = (1 << position) - 1
    rows = [
        (r & low) | ((r >> (position + 1)) << position) for r in code.generator.rows
    ]
    gen = BitMatrix(rows, code.length - 1).rref()
    par = gen.nullspace_basis()
    prov = replace(code.provenance, ops=code.provenance.ops + ("puncture",))
    return LinearCode(code.length - 1, gen.nrows, gen, par, prov)


def _position_offset(field: GF2m, length: int) -> int:
    if length == field.n:
        return 0
    if length == field.n + 1:
        return 1
    raise ValueError(
        f"word length {length} is neither {field.n} (cyclic) nor {field.n + 1} (extended)"
    )


def power_sum(field: GF2m, word: int, s: int, length: int) -> int:
    """Sum over the support of (coordinate's field element)^s, with 0^0 = 1.

    For length n the coordinate i carries alpha^i; for length n + 1 position
    0 carries the element 0 and position j carries alpha^(j-1).  A word lies
    in the code with defining set T iff this vanishes for every s in T.
    """
    off = _position_offset(field, length)
    if word < 0 or word >> length:
        raise ValueError("word outside the coordinate range")
    if not 0 <= s <= field.n:
        raise ValueError(f"exponent must lie in 0..{field.n}")
    acc = 0
    rest = word
    if off and (word & 1):
        rest &= ~1
        if s == 0:
            acc ^= 1
    while rest:
        p = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        acc ^= field.exp[((p - off) * s) % field.n]
    return acc


def membership_by_defining_set(field: GF2m, ds: DefiningSet, word: int, length: int) -> bool:
    """True iff every root functional indexed by the defining set vanishes."""
    return all(power_sum(field, word, s, length) == 0 for s in ds.members)


def membership_matrix(field: GF2m, ds: DefiningSet, length: int) -> BitMatrix:
    """The membership test of `membership_by_defining_set` as a parity-check
    matrix: bit b of each root functional is one GF(2) linear form."""
    off = _position_offset(field, length)
    rows = []
    for s in ds.members:
        vals = []
        for p in range(length):
            if off and p == 0:
                vals.append(1 if s == 0 else 0)
            else:
                vals.append(field.exp[((p - off) * s) % field.n])
        for b in range(field.m):
            mask = 0
            for p, v in enumerate(vals):
                mask |= ((v >> b) & 1) << p
            if mask:
                rows.append(mask)
    return BitMatrix(rows, length).rref()


def column_syndromes(parity_check: BitMatrix) -> list[int]:
    """Per-coordinate parity-check syndromes, bit i = row i."""
    out = [0] * parity_check.ncols
    for i, row in enumerate(parity_check.rows):
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            out[j] |= 1 << i
    return out


@dataclass(frozen=True)
class DistanceResult:
    """value is the exact minimum distance when exact, else a proven lower
    bound (all weights < value were exhaustively excluded)."""

    value: int
    exact: bool
    witness: tuple[int, ...] | None = None


def min_distance(code: LinearCode, budget: int = 8) -> DistanceResult:
    """Exact minimum distance, or a certified lower bound.

    Small dimensions are enumerated exhaustively; otherwise weights
    1..budget are searched with syndrome meet-in-the-middle.  Never guesses:
    an inexact result means every smaller weight was ruled out.
    """
    if code.dimension == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if code.dimension <= kernels.BRUTE_DIM_CAP:
        hist = kernels.weight_histogram(code.generator.rows, code.length)
        for i in range(1, code.length + 1):
            if hist[i]:
                return DistanceResult(int(i), True)
        raise ConsistencyError("no nonzero weight found for a nonzero code")
    cols = column_syndromes(code.parity_check)
    even_only = all(r.bit_count() % 2 == 0 for r in code.generator.rows)
    for w in range(1, budget + 1):
        if even_only and w % 2 == 1:
            continue
        if w == 1:
            hit = next((j for j, s in enumerate(cols) if s == 0), None)
            if hit is not None:
                return DistanceResult(1, True, (hit,))
            continue
        try:
            found = kernels.mitm_supports(cols, code.length, w, first_only=True)
        except InfeasibleError:
            return DistanceResult(w, False)
        if found.shape[0]:
            return DistanceResult(w, True, tuple(int(x) for x in found[0]))
    return DistanceResult(budget + 1, False)


# ---------------------------------------------------------------------------
# serialization


def save_code(code: LinearCode, path_prefix: str) -> tuple[str, str]:
    """Write `<prefix>.json` (manifest) and `<prefix>.bits` (generator rows,
    row-major, little-endian bit order within bytes).  Returns both paths."""
    blob = code.generator.to_bytes()
    digest = hashlib.sha256(blob).hexdigest()
    json_path = path_prefix + ".json"
    blob_path = path_prefix + ".bits"
    prov = code.provenance
    manifest = {
        "format": CODE_FORMAT,
        "m": prov.m,
        "E": list(prov.E) if prov.E is not None else None,
        "ops": list(prov.ops),
        "role": prov.role,
        "modulus": prov.modulus,
        "convention": prov.convention,
        "length": code.length,
        "dimension": code.dimension,
        "gen_poly": code.gen_poly,
        "defining_set": (
            {"n": code.defining_set.n, "members": list(code.defining_set.members)}
            if code.defining_set is not None
            else None
        ),
        "generator_blob": os.path.basename(blob_path),
        "generator_sha256": digest,
        "row_bytes": code.generator.row_bytes(),
    }
    with open(blob_path, "wb") as f:
        f.write(blob)
    with open(json_path, "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    return json_path, blob_path


def load_code(json_path: str) -> LinearCode:
    """Rebuild a code from its manifest; digests and canonical form are
    verified, the parity-check matrix is recomputed."""
    with open(json_path) as f:
        manifest = json.load(f)
    if manifest.get("format") != CODE_FORMAT:
        raise ValueError(f"unrecognised code file format: {manifest.get('format')!r}")
    blob_path = os.path.join(
        os.path.dirname(os.path.abspath(json_path)), manifest["generator_blob"]
    )
    with open(blob_path, "rb") as f:
        blob = f.read()
    digest = hashlib.sha256(blob).hexdigest()
    if digest != manifest["generator_sha256"]:
        raise ConsistencyError("generator blob digest mismatch")
    length = manifest["length"]
    dimension = manifest["dimension"]
    gen = BitMatrix.from_bytes(blob, dimension, length)
    if gen != gen.rref():
        raise ConsistencyError("stored generator matrix is not in canonical form")
    par = gen.nullspace_basis()
    ds = None
    if manifest["defining_set"] is not None:
        ds = DefiningSet(
            n=manifest["defining_set"]["n"],
            members=tuple(manifest["defining_set"]["members"]),
        )
    prov = Provenance(
        m=manifest["m"],
        E=tuple(manifest["E"]) if manifest["E"] is not None else None,
        ops=tuple(manifest["ops"]),
        modulus=manifest["modulus"],
        convention=manifest["convention"],
    )
    return LinearCode(
        length, dimension, gen, par, prov,
        defining_set=ds, gen_poly=manifest.get("gen_poly"),
    )
