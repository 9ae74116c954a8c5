"""Arithmetic in GF(2^m), 2 <= m <= 26.

Elements are ints in polynomial basis: bit i is the coefficient of x^i,
where x is the class of the modulus variable.  The modulus for each degree
is the Conway polynomial, so alpha = x is always primitive and generator
polynomials printed by this package match computer-algebra conventions.
The frozen table below is produced by scripts/gen_conway_table.py.
"""

from dataclasses import dataclass, field

import numpy as np

MIN_M = 2
MAX_M = 26

# Conway polynomials over GF(2), bit-encoded (bit i = coeff of x^i).
CONWAY_POLY = {
    2: 0x7,       # x^2 + x + 1
    3: 0xb,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x5b,      # x^6 + x^4 + x^3 + x + 1
    7: 0x83,      # x^7 + x + 1
    8: 0x11d,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x46f,    # x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x10eb,   # x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    13: 0x201b,   # x^13 + x^4 + x^3 + x + 1
    14: 0x40a9,   # x^14 + x^7 + x^5 + x^3 + 1
    15: 0x8035,   # x^15 + x^5 + x^4 + x^2 + 1
    16: 0x1002d,  # x^16 + x^5 + x^3 + x^2 + 1
    17: 0x20009,  # x^17 + x^3 + 1
    18: 0x41403,   # x^18 + x^12 + x^10 + x + 1
    19: 0x80027,   # x^19 + x^5 + x^2 + x + 1
    20: 0x1006f3,  # x^20 + x^10 + x^9 + x^7 + x^6 + x^5 + x^4 + x + 1
    21: 0x200065,  # x^21 + x^6 + x^5 + x^2 + 1
    22: 0x401f61,  # x^22 + x^12 + x^11 + x^10 + x^9 + x^8 + x^6 + x^5 + 1
    23: 0x800021,  # x^23 + x^5 + 1
    24: 0x101e6a9, # x^24 + x^16 + x^15 + x^14 + x^13 + x^10 + x^9 + x^7 + x^5 + x^3 + 1
    25: 0x2000145, # x^25 + x^8 + x^6 + x^2 + 1
    26: 0x40045d3, # x^26 + x^14 + x^10 + x^8 + x^7 + x^6 + x^4 + x + 1
}

# Table size at which exp/log/trace lookup tables are still cheap to build.
TABLE_MAX_M = 16


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division; n <= 2^26)."""
    fs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fs.append(n)
    return fs


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) with a fixed primitive modulus; alpha is the class of x."""

    m: int
    modulus: int
    n: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def alpha(self) -> int:
        return 2

    def mul(self, a: int, b: int) -> int:
        """Carry-less multiply then reduce by the modulus."""
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.m:
                a ^= self.modulus
        return r

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        e %= self.n
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inverse_via_power(self, a: int) -> int:
        """a^(2^m - 2): the field inverse for a != 0, and 0 for a = 0."""
        return self.pow(a, self.n - 1)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)), valued in {0, 1}."""
        t = 0
        for _ in range(self.m):
            t ^= a
            a = self.mul(a, a)
        assert t in (0, 1)
        return t

    # -- lookup tables for hot loops (sequences, DFT) ---------------------

    def exp_table(self) -> np.ndarray:
        """exp_table[k] = alpha^k for 0 <= k < n, as uint32."""
        tab = self._cache.get("exp")
        if tab is None:
            if self.m > TABLE_MAX_M:
                raise ValueError(f"exp table too large for m={self.m}")
            tab = np.empty(self.n, dtype=np.uint32)
            a = 1
            for k in range(self.n):
                tab[k] = a
                a <<= 1
                if a >> self.m:
                    a ^= self.modulus
            self._cache["exp"] = tab
        return tab

    def log_table(self) -> np.ndarray:
        """log_table[alpha^k] = k; entry 0 is n (sentinel, never a log)."""
        tab = self._cache.get("log")
        if tab is None:
            exp = self.exp_table()
            tab = np.full(self.n + 1, self.n, dtype=np.int64)
            tab[exp] = np.arange(self.n, dtype=np.int64)
            self._cache["log"] = tab
        return tab

    def trace_mask(self) -> int:
        """Bitmask t with trace(a) = parity(popcount(a & t)) by linearity."""
        mask = self._cache.get("tmask")
        if mask is None:
            mask = 0
            for j in range(self.m):
                if self.trace(1 << j):
                    mask |= 1 << j
            self._cache["tmask"] = mask
        return mask


def _order_of_alpha_is_n(spec: FieldSpec) -> bool:
    if spec.pow(spec.alpha, spec.n) != 1:
        return False
    return all(spec.pow(spec.alpha, spec.n // r) != 1
               for r in prime_factors(spec.n))


def field_new(m: int) -> FieldSpec:
    """The GF(2^m) spec backed by the embedded Conway modulus table."""
    if not MIN_M <= m <= MAX_M:
        raise ValueError(f"extension degree {m} outside supported range "
                         f"[{MIN_M}, {MAX_M}]")
    spec = FieldSpec(m=m, modulus=CONWAY_POLY[m], n=(1 << m) - 1)
    # Guards table corruption: x must generate the full multiplicative group.
    if not _order_of_alpha_is_n(spec):
        raise AssertionError(f"modulus for m={m} is not primitive")
    return spec
