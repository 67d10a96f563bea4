"""Arithmetic over GF(2): polynomials, the fields GF(2^m), bit-packed matrices.

Polynomials are plain ints, bit i holding the coefficient of x^i, so the
leading stored coefficient is automatically 1 and the zero polynomial is 0.
Matrices store one int per row with bit j addressing column j.
"""
from __future__ import annotations

from .cyclotomic import coset
from .errors import ConsistencyError

# ---------------------------------------------------------------------------
# polynomials over GF(2)


def poly_degree(p: int) -> int:
    """Degree of p; the zero polynomial has degree -1."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        a ^= b << shift
        q |= 1 << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return poly_mul(poly_divmod(a, poly_gcd(a, b))[0], b)


def poly_powmod(a: int, e: int, mod: int) -> int:
    """a^e reduced mod `mod` (e >= 0)."""
    r = 1 if poly_degree(mod) > 0 else 0
    a = poly_mod(a, mod)
    while e:
        if e & 1:
            r = poly_mod(poly_mul(r, a), mod)
        a = poly_mod(poly_mul(a, a), mod)
        e >>= 1
    return r


def poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p: int) -> bool:
    """Rabin's test over GF(2)."""
    m = poly_degree(p)
    if m <= 0:
        return False
    x = 2
    if poly_powmod(x, 1 << m, p) != poly_mod(x, p):
        return False
    for r in _prime_factors(m):
        h = poly_powmod(x, 1 << (m // r), p) ^ poly_mod(x, p)
        if poly_gcd(h, p) != 1:
            return False
    return True


def is_primitive(p: int) -> bool:
    """True iff p is irreducible and x generates the multiplicative group."""
    m = poly_degree(p)
    if m <= 0 or not is_irreducible(p):
        return False
    n = (1 << m) - 1
    if poly_powmod(2, n, p) != 1:
        return False
    for q in _prime_factors(n):
        if poly_powmod(2, n // q, p) == 1:
            return False
    return True


def default_modulus(m: int) -> int:
    """The primitive degree-m modulus with the smallest integer encoding."""
    for cand in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_primitive(cand):
            return cand
    raise ConsistencyError(f"no primitive polynomial of degree {m} found")


# ---------------------------------------------------------------------------
# GF(2^m)


class GF2m:
    """GF(2^m) in polynomial basis with log/antilog tables.

    Elements are ints in {0, ..., 2^m - 1}; addition is xor; `alpha` (the
    class of x, encoded as 2) is a generator because the modulus is required
    to be primitive.
    """

    __slots__ = ("m", "modulus", "n", "exp", "log")

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= 20:
            raise ValueError("m must satisfy 2 <= m <= 20")
        if modulus is None:
            modulus = default_modulus(m)
        if poly_degree(modulus) != m:
            raise ValueError(f"modulus degree check failed: deg {poly_degree(modulus)} != {m}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus irreducibility check failed: {poly_str(modulus)} is reducible")
        if not is_primitive(modulus):
            raise ValueError(f"modulus primitivity check failed: {poly_str(modulus)} is irreducible but x is not a generator")
        self.m = m
        self.modulus = modulus
        n = (1 << m) - 1
        self.n = n
        # exp is doubled so products of logs never need an explicit mod n
        exp = [0] * (2 * n)
        log = [-1] * (n + 1)
        v = 1
        for i in range(n):
            exp[i] = exp[i + n] = v
            log[v] = i
            v <<= 1
            if v >> m:
                v ^= modulus
        if v != 1 or log.count(-1) != 1:
            raise ConsistencyError("antilog table did not close after 2^m - 1 steps")
        self.exp = exp
        self.log = log

    @property
    def alpha(self) -> int:
        return 2

    @property
    def size(self) -> int:
        return self.n + 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[self.n - self.log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e with the convention 0^0 = 1; negative e requires a != 0."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self.exp[(self.log[a] * e) % self.n]

    def __repr__(self):
        return f"GF2m(m={self.m}, modulus={poly_str(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))


def minimal_polynomial(field: GF2m, exponent: int) -> int:
    """Minimal polynomial over GF(2) of alpha^exponent, as an int.

    Computed as the product of (x + alpha^j) over the 2-cyclotomic coset of
    the exponent; the result must come out with coefficients in {0, 1}.
    """
    cs = coset(field.n, exponent)
    # coefficients in the field, little-endian
    poly = [1]
    for j in cs:
        a = field.exp[j]
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= field.mul(c, a)
        poly = nxt
    if any(c not in (0, 1) for c in poly):
        raise ConsistencyError("conjugate product has a coefficient outside GF(2)")
    return sum(c << i for i, c in enumerate(poly))


# ---------------------------------------------------------------------------
# bit-packed matrices over GF(2)


class BitMatrix:
    """A matrix over GF(2), one int per row, bit j = column j."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols: int):
        self.rows = [int(r) for r in rows]
        self.ncols = ncols
        mask = (1 << ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the declared column range")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls([1 << i for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def copy(self) -> "BitMatrix":
        return BitMatrix(list(self.rows), self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def _echelon(self):
        """Forward elimination; returns {pivot_col: row} (rows not reduced above)."""
        pivots: dict[int, int] = {}
        for r in self.rows:
            cur = r
            while cur:
                low = (cur & -cur).bit_length() - 1
                if low in pivots:
                    cur ^= pivots[low]
                else:
                    pivots[low] = cur
                    break
        return pivots

    def rank(self) -> int:
        return len(self._echelon())

    def rref(self) -> "BitMatrix":
        """Reduced row-echelon form: zero rows dropped, rows ordered by pivot.

        The pivot of a row is its lowest set bit (column 0 is the leftmost
        position); in the canonical form no row has a bit in another row's
        pivot column, which makes rref a row-space invariant.
        """
        pivots = self._echelon()
        final: dict[int, int] = {}
        mask_all = 0
        for c in pivots:
            mask_all |= 1 << c
        for c in sorted(pivots, reverse=True):
            row = pivots[c]
            rest = row & mask_all & ~(1 << c)
            while rest:
                b = (rest & -rest).bit_length() - 1
                row ^= final[b]
                rest = row & mask_all & ~(1 << c)
            final[c] = row
        return BitMatrix([final[c] for c in sorted(final)], self.ncols)

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self._echelon()))

    def nullspace_basis(self) -> "BitMatrix":
        """Canonical (rref) basis of {x : self @ x^T = 0}."""
        red = self.rref()
        piv = [(r & -r).bit_length() - 1 for r in red.rows]
        piv_set = set(piv)
        free = [c for c in range(self.ncols) if c not in piv_set]
        acc = {f: 0 for f in free}
        for p, row in zip(piv, red.rows):
            rest = row & ~(1 << p)
            while rest:
                f = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                acc[f] |= 1 << p
        basis = [(1 << f) | acc[f] for f in free]
        return BitMatrix(basis, self.ncols).rref()

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, row in enumerate(self.rows):
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                out[j] |= 1 << i
        return BitMatrix(out, self.nrows)

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        out = []
        for row in self.rows:
            acc = 0
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                acc ^= other.rows[j]
            out.append(acc)
        return BitMatrix(out, other.ncols)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def row_space_equal(self, other: "BitMatrix") -> bool:
        return self.ncols == other.ncols and self.rref() == other.rref()

    def row_bytes(self) -> int:
        return (self.ncols + 7) // 8

    def to_bytes(self) -> bytes:
        """Row-major packing, little-endian bit order within each byte."""
        nb = self.row_bytes()
        return b"".join(r.to_bytes(nb, "little") for r in self.rows)

    @classmethod
    def from_bytes(cls, data: bytes, nrows: int, ncols: int) -> "BitMatrix":
        nb = (ncols + 7) // 8
        if len(data) != nrows * nb:
            raise ValueError(f"blob length {len(data)} != {nrows} rows x {nb} bytes")
        rows = [
            int.from_bytes(data[i * nb : (i + 1) * nb], "little") for i in range(nrows)
        ]
        return cls(rows, ncols)
