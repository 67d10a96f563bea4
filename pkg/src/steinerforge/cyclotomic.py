"""2-cyclotomic cosets, defining sets, and the digitwise partial order.

Defining sets live in {0, ..., n} for length n = 2^m - 1: residues mod n
describe roots of a cyclic code's generator polynomial, while the extra
marker n (and the residue 0) track the two parity functionals picked up by
extending a code.  A defining set that contains 0 and is downward closed
under the base-p digitwise partial order characterises an affine-invariant
extended code (the Kasami-Lin-Peterson criterion).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError


def coset(n: int, s: int) -> tuple[int, ...]:
    """2-cyclotomic coset of s mod n, sorted ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    s %= n
    out = {s}
    t = (s * 2) % n
    while t != s:
        out.add(t)
        t = (t * 2) % n
    return tuple(sorted(out))


def coset_leaders(n: int) -> tuple[int, ...]:
    """Smallest element of every 2-cyclotomic coset mod n, ascending."""
    seen = bytearray(n)
    leaders = []
    for s in range(n):
        if not seen[s]:
            leaders.append(s)
            for t in coset(n, s):
                seen[t] = 1
    return tuple(leaders)


@dataclass(frozen=True)
class DefiningSet:
    """A subset of {0, ..., n} whose part inside {1, ..., n-1} is closed under
    doubling mod n.  Membership of the residue 0 and of the marker n is free."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", mem)
        if mem and (mem[0] < 0 or mem[-1] > self.n):
            raise ValueError("members must lie in {0, ..., n}")
        body = set(m for m in mem if 0 < m < self.n)
        for s in body:
            if (2 * s) % self.n not in body:
                raise ValueError(
                    f"members are not a union of 2-cyclotomic cosets mod {self.n}: "
                    f"{s} present but {(2 * s) % self.n} missing"
                )

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def contains_zero(self) -> bool:
        return 0 in self.member_set

    @property
    def contains_n(self) -> bool:
        return self.n in self.member_set

    @cached_property
    def leaders(self) -> tuple[int, ...]:
        """Coset leaders of the residues in the set (marker n excluded)."""
        out = []
        seen = set()
        for s in self.members:
            if s == self.n or s in seen:
                continue
            cs = coset(self.n, s)
            seen.update(cs)
            out.append(cs[0])
        return tuple(sorted(out))

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __contains__(self, s: int) -> bool:
        return s in self.member_set


def defining_set_for(m: int, E, extended: bool = False) -> DefiningSet:
    """Defining set joining the coset of 1 with the cosets of 1 + 2^e, e in E.

    E must be a nonempty subset of {1, ..., floor(m/2)}; m >= 3 (at m = 2 the
    point 1 + 2^1 = 3 collapses to 0 mod n = 3 and the family degenerates).
    With extended=True the residue 0 is added, plus the marker n whenever 0
    already belonged to the cyclic set (never the case here).
    """
    if m < 3:
        raise ValueError("m must be >= 3 (1 + 2^e must be a nonzero residue mod 2^m - 1)")
    E = tuple(sorted(set(int(e) for e in E)))
    if not E:
        raise ValueError("E must be nonempty")
    if E[0] < 1 or E[-1] > m // 2:
        raise ValueError(f"E must be a subset of {{1, ..., {m // 2}}}, got {E}")
    n = (1 << m) - 1
    members = set(coset(n, 1))
    for e in E:
        s = 1 + (1 << e)
        cs = coset(n, s)
        if cs[0] != s:
            raise ConsistencyError(
                f"1 + 2^{e} is not the leader of its coset mod 2^{m}-1: {cs}"
            )
        members.update(cs)
    if extended:
        if 0 in members:
            members.add(n)
        members.add(0)
    return DefiningSet(n=n, members=tuple(sorted(members)))


def p_adic_leq(r: int, s: int, p: int = 2, num_digits: int | None = None) -> bool:
    """Digitwise partial order: every base-p digit of r is <= the digit of s.

    num_digits, when given, caps the expansion: both operands must lie in
    {0, ..., p^num_digits - 1}.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if r < 0 or s < 0:
        raise ValueError("operands must be non-negative")
    if num_digits is not None:
        top = p ** num_digits
        if r >= top or s >= top:
            raise ValueError(f"operands must be < p^num_digits = {top}")
    if p == 2:
        return (r & s) == r
    while r or s:
        if r % p > s % p:
            return False
        r //= p
        s //= p
    return True


def _submasks_ascending(s: int) -> list[int]:
    """All r with r & s == r, sorted ascending."""
    subs = []
    r = s
    while True:
        subs.append(r)
        if r == 0:
            break
        r = (r - 1) & s
    subs.reverse()
    return subs


def klp_affine_invariant(ds: DefiningSet) -> tuple[bool, tuple[int, int] | None]:
    """Kasami-Lin-Peterson criterion for an extended defining set over p = 2.

    True iff the set is downward closed in {0, ..., n} under the digitwise
    order; on failure returns a witness (s in set, r with r ⪯ s missing).
    The set must contain 0 (extended convention).
    """
    if not ds.contains_zero:
        raise ValueError("extended defining set required (0 must be a member)")
    mem = ds.member_set
    for s in ds.members:
        for r in _submasks_ascending(s):
            if r not in mem:
                return False, (s, r)
    return True, None
