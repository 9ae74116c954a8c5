"""Combinatorics over Z_n, n = 2^m - 1: 2-cyclotomic cosets and the parity
functionals that carve out the T/D/N defining sets.

Conventions: the leader of a coset is its minimum element; every nonzero
leader is odd and at most 2^(m-1)-1.  A DefiningSet is stored as sorted
leaders plus an optional adjoined zero for the extra (x-1) generator factor,
so closure under doubling is automatic.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2m import MAX_M, MIN_M


def wt2(i: int) -> int:
    """Binary weight (popcount) of i >= 0."""
    if i < 0:
        raise ValueError("wt2 needs a nonnegative integer")
    return i.bit_count()


def odd_part(i: int) -> int:
    """Largest odd divisor of i > 0."""
    if i <= 0:
        raise ValueError("odd_part needs a positive integer")
    return i >> ((i & -i).bit_length() - 1)


def epsilon(a: int, t: int) -> int:
    """Bit-run length functional: 1 if a = 2^t - 1, else ceil(log2((2^t-1)/a)).

    Satisfies epsilon(a, t+1) = epsilon(a, t) + 1 and
    epsilon(2^k * a, t) = epsilon(a, t) - k for 0 <= k < epsilon(a, t).
    """
    top = (1 << t) - 1
    if not 1 <= a <= top:
        raise ValueError(f"epsilon: need 1 <= a <= 2^{t}-1, got {a}")
    if a == top:
        return 1
    e = 0
    v = a
    while v < top:
        v <<= 1
        e += 1
    return e


class CosetTable:
    """All 2-cyclotomic cosets mod n = 2^m - 1, with leaders, sizes l_i and
    even-element counts rho_i.  Immutable after construction."""

    def __init__(self, m: int):
        if not MIN_M <= m <= MAX_M:
            raise ValueError(f"degree {m} outside supported range")
        n = (1 << m) - 1
        idx = np.arange(n, dtype=np.int64)
        lead = idx.copy()
        orbit_len = np.full(n, m, dtype=np.int64)
        cur = idx
        for step in range(1, m):
            cur = (cur << 1) % n
            np.minimum(lead, cur, out=lead)
            closed = (cur == idx) & (orbit_len == m)
            orbit_len[closed] = step

        self.m = m
        self.n = n
        self.leader_of = lead
        self.leaders = np.unique(lead)
        sizes = np.bincount(lead, minlength=n)
        rho = np.bincount(lead[(idx & 1) == 0], minlength=n)
        if not np.array_equal(sizes[self.leaders], orbit_len[self.leaders]):
            raise AssertionError("coset table corrupt: size mismatch")
        self.size_of = {int(j): int(sizes[j]) for j in self.leaders}
        self.rho_of = {int(j): int(rho[j]) for j in self.leaders}
        self._v = None
        self._u = {}

    def is_leader(self, j: int) -> bool:
        return 0 <= j < self.n and self.leader_of[j] == j

    def coset(self, j: int) -> list[int]:
        """Elements of the coset containing j, in orbit order from its leader."""
        j = int(self.leader_of[j % self.n])
        out = [j]
        cur = (j << 1) % self.n
        while cur != j:
            out.append(cur)
            cur = (cur << 1) % self.n
        return out

    # -- parity functionals ----------------------------------------------

    def v_values(self) -> dict[int, int]:
        """v_i = m * rho_i / l_i mod 2 for every leader i."""
        if self._v is None:
            v = {}
            for j in self.leaders:
                j = int(j)
                num = self.m * self.rho_of[j]
                if num % self.size_of[j]:
                    raise AssertionError(f"l_{j} does not divide m*rho_{j}")
                v[j] = (num // self.size_of[j]) & 1
            self._v = v
        return self._v

    def u_values(self, h: int) -> dict[int, int]:
        """u_j for the Ding-Zhou construction at trinomial parameter h.

        Differs from v only on the small odd leaders below 2^h: the j = 1
        branch is v_1 + h + 1, other j < 2^h get kappa_j = epsilon(j, h)
        added.  Cached per h.
        """
        if not 0 < h <= math.ceil(self.m / 2):
            raise ValueError(f"h={h} outside (0, ceil(m/2)] for m={self.m}")
        u = self._u.get(h)
        if u is None:
            u = dict(self.v_values())
            for j in range(1, 1 << h, 2):
                if not self.is_leader(j):
                    raise AssertionError(f"odd {j} < 2^h is not a leader")
                if j == 1:
                    u[1] = (u[1] + h + 1) & 1
                else:
                    u[j] = (epsilon(j, h) + u[j]) & 1
            self._u[h] = u
        return u


@lru_cache(maxsize=None)
def coset_table(m: int) -> CosetTable:
    return CosetTable(m)


def v_value(table: CosetTable, leader: int) -> int:
    if not table.is_leader(leader):
        raise ValueError(f"{leader} is not a coset leader mod {table.n}")
    return table.v_values()[leader]


def u_value(table: CosetTable, leader: int, h: int) -> int:
    if not table.is_leader(leader):
        raise ValueError(f"{leader} is not a coset leader mod {table.n}")
    return table.u_values(h)[leader]


@dataclass(frozen=True)
class DefiningSet:
    """Union of cyclotomic cosets in canonical form (sorted leaders), plus a
    flag adjoining the exponent 0 beyond the coset content (the (x-1) factor).
    """

    n: int
    leaders: tuple
    adjoin_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "leaders", tuple(sorted(set(self.leaders))))
        if self.adjoin_zero and 0 in self.leaders:
            raise ValueError("0 already in the coset content; adjoining it "
                             "again would give (x-1) multiplicity 2")

    @property
    def m(self) -> int:
        return (self.n + 1).bit_length() - 1

    def table(self) -> CosetTable:
        return coset_table(self.m)

    def size(self) -> int:
        t = self.table()
        return sum(t.size_of[j] for j in self.leaders) + bool(self.adjoin_zero)

    def expand(self) -> np.ndarray:
        """All exponents j with alpha^j a generator-polynomial root, sorted."""
        t = self.table()
        mask = np.isin(t.leader_of, np.asarray(self.leaders, dtype=np.int64))
        if self.adjoin_zero:
            mask[0] = True
        return np.flatnonzero(mask)

    def contains_zero(self) -> bool:
        return self.adjoin_zero or (len(self.leaders) > 0 and self.leaders[0] == 0)

    def same_roots(self, other: "DefiningSet") -> bool:
        return (self.n == other.n
                and np.array_equal(self.expand(), other.expand()))

    @classmethod
    def from_residues(cls, n: int, residues, adjoin_zero: bool = False):
        t = coset_table((n + 1).bit_length() - 1)
        if t.n != n:
            raise ValueError(f"{n} is not 2^m - 1 for supported m")
        leaders = {int(t.leader_of[r % n]) for r in residues}
        return cls(n=n, leaders=tuple(sorted(leaders)), adjoin_zero=adjoin_zero)


def T_set(m: int, parity: int) -> DefiningSet:
    """Union of the cosets whose v-parity equals `parity` (Si-Ding split)."""
    _check_parity(parity)
    t = coset_table(m)
    v = t.v_values()
    return DefiningSet(t.n, tuple(j for j in v if v[j] == parity))


def D_set(m: int, h: int, parity: int) -> DefiningSet:
    """Union of the cosets whose u-parity equals `parity` (Ding-Zhou split)."""
    _check_parity(parity)
    t = coset_table(m)
    u = t.u_values(h)
    return DefiningSet(t.n, tuple(j for j in u if u[j] == parity))


def N_set(m: int, parity: int) -> DefiningSet:
    """Nonzero residues whose binary weight has the given parity (the
    Tang-Ding defining sets); coset-closed since doubling mod n rotates bits.
    """
    _check_parity(parity)
    t = coset_table(m)
    return DefiningSet(
        t.n, tuple(int(j) for j in t.leaders if j != 0 and wt2(int(j)) & 1 == parity))


def _check_parity(parity):
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")


def verify_decomposition(a: int, m: int) -> dict:
    """Check the even-count formula for the coset of odd a: writing
    a = s_a * b with s_a = n / (2^(l_a) - 1), the coset of a holds
    l_a - wt2(b) even elements and the coset of n - a holds wt2(b).
    """
    if a % 2 == 0:
        raise ValueError("verify_decomposition needs odd a")
    t = coset_table(m)
    a %= t.n
    l = t.size_of[int(t.leader_of[a])]
    s = t.n // ((1 << l) - 1)
    if a % s:
        raise AssertionError(f"{a} not divisible by s_a={s}")
    b = a // s
    capital_n = wt2(b) - 1
    rho_formula = l - capital_n - 1
    rho_enum = sum(1 for x in t.coset(a) if x % 2 == 0)
    comp_enum = sum(1 for x in t.coset(t.n - a) if x % 2 == 0)
    return {
        "a": a, "l_a": l, "N": capital_n,
        "rho_formula": rho_formula, "rho_enumerated": rho_enum,
        "rho_complement_formula": capital_n + 1,
        "rho_complement_enumerated": comp_enum,
        "ok": rho_formula == rho_enum and capital_n + 1 == comp_enum,
    }


def verify_full_length(a: int, m: int, b_max: int | None = None) -> bool:
    """True when every coset of a*b, b odd up to the stated range bound, has
    full length m (requires gcd(a, n) = 1)."""
    t = coset_table(m)
    if math.gcd(a, t.n) != 1:
        raise ValueError(f"gcd({a}, {t.n}) != 1")
    if b_max is None:
        b_max = 1 << (m // 2) if m % 2 == 0 else (1 << ((m + 1) // 2)) - 1
    return all(t.size_of[int(t.leader_of[a * b % t.n])] == m
               for b in range(1, b_max + 1, 2))
