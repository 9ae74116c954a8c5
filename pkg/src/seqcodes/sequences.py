"""The two trace-sequence families and their spectral analysis.

The construction evaluates s_t = Tr(f(1 + alpha^t)) over one period n = 2^m-1:
f(x) = x^(2^m-2) gives the inverse-based family, f(x) = x + x^(2^m-2) +
x^(2^h-1) the trinomial family.  dft_support recovers the exponents with
nonzero spectral coefficient, which for these families must reproduce the
T/D defining-set splits; berlekamp_massey independently recovers the linear
complexity and minimal polynomial.
"""

from dataclasses import dataclass

import numpy as np

from . import polybits
from .gf2m import TABLE_MAX_M, FieldSpec, field_new
from .cosets import coset_table


@dataclass(frozen=True)
class BinarySequence:
    period: int
    bits: np.ndarray  # uint8, one period, bits[t] = s_t

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=np.uint8)
        if b.shape != (self.period,):
            raise ValueError("bits length must equal the period")
        if b.max(initial=0) > 1:
            raise ValueError("bits must be 0/1")
        object.__setattr__(self, "bits", b)

    def to_hex(self) -> str:
        """Hex packing, most-significant bit of the first digit = s_0;
        zero-padded at the tail to a multiple of 4 bits."""
        return np.packbits(self.bits).tobytes().hex()

    @classmethod
    def from_hex(cls, s: str, period: int) -> "BinarySequence":
        raw = np.unpackbits(np.frombuffer(bytes.fromhex(s), dtype=np.uint8))
        if len(raw) < period or raw[period:].any():
            raise ValueError("hex string does not hold this period")
        return cls(period, raw[:period])

    def __eq__(self, other):
        return (isinstance(other, BinarySequence)
                and self.period == other.period
                and np.array_equal(self.bits, other.bits))


def _field_tables(m: int):
    field = field_new(m)
    if m > TABLE_MAX_M:
        raise ValueError(f"sequence generation is table-driven; m={m} exceeds "
                         f"the m<={TABLE_MAX_M} table limit")
    exp = field.exp_table().astype(np.int64)
    log = field.log_table()
    return field, exp, log


def _trace_bits(field: FieldSpec, values: np.ndarray) -> np.ndarray:
    """Vectorized trace: parity of popcount(value & trace_mask)."""
    mask = field.trace_mask()
    anded = np.bitwise_and(values.astype(np.uint32), np.uint32(mask))
    return (np.bitwise_count(anded) & 1).astype(np.uint8)


def si_ding_sequence(m: int) -> BinarySequence:
    """s_t = Tr((1 + alpha^t)^(2^m - 2)): trace of the inverse of 1+alpha^t."""
    field, exp, log = _field_tables(m)
    n = field.n
    y = np.bitwise_xor(exp, 1)                # 1 + alpha^t, zero at t = 0
    inv = np.zeros(n, dtype=np.int64)
    nz = y != 0
    inv[nz] = exp[(n - log[y[nz]]) % n]
    return BinarySequence(n, _trace_bits(field, inv))


def ding_zhou_sequence(m: int, h: int) -> BinarySequence:
    """s_t = Tr(f(1 + alpha^t)) for f(x) = x + x^(2^m-2) + x^(2^h-1)."""
    field, exp, log = _field_tables(m)
    n = field.n
    if not 0 < h <= (m + 1) // 2:
        raise ValueError(f"h={h} outside (0, ceil(m/2)] for m={m}")
    y = np.bitwise_xor(exp, 1)
    out = y.copy()                            # the x term
    nz = y != 0
    ylog = log[y[nz]]
    out[nz] ^= exp[(n - ylog) % n]            # x^(2^m-2) = inverse
    out[nz] ^= exp[(((1 << h) - 1) * ylog) % n]   # x^(2^h-1)
    return BinarySequence(n, _trace_bits(field, out))


def dft_support(seq: BinarySequence, field: FieldSpec) -> set[int]:
    """{i : a_i != 0} for s_t = sum_i a_i alpha^(it).

    Inversion is exact over GF(2^m) because n is odd: a_i = sum_t s_t
    alpha^(-it).  A binary sequence has coset-closed support (a_(2i) = a_i^2),
    so only coset leaders are evaluated and nonzero ones expand to full cosets.
    """
    n = field.n
    if seq.period != n:
        raise ValueError(f"period {seq.period} does not match field n={n}")
    tpos = np.flatnonzero(seq.bits).astype(np.int64)   # t with s_t = 1
    if len(tpos) == 0:
        return set()
    exp = field.exp_table().astype(np.int64)
    table = coset_table(field.m)
    support: set[int] = set()
    for j in table.leaders:
        j = int(j)
        terms = exp[(-j * tpos) % n]
        a_j = np.bitwise_xor.reduce(terms)
        if a_j != 0:
            support.update(table.coset(j))
    return support


def berlekamp_massey(seq: BinarySequence) -> tuple[int, int]:
    """Linear complexity and monic minimal polynomial of the periodic
    sequence, fed two full periods (enough whenever L <= period).

    The minimal polynomial is returned in root orientation: its roots are
    exactly {alpha^i : i in dft_support(seq)}, i.e. it is the reciprocal of
    the Berlekamp-Massey connection polynomial.
    """
    bits = np.concatenate([seq.bits, seq.bits])
    # rev holds s_0..s_t reversed so bit j is s_(t-j); the discrepancy is
    # then parity(popcount(C & rev)).
    c, b = 1, 1
    l, mm = 0, -1
    rev = 0
    for t, s in enumerate(bits):
        rev = (rev << 1) | int(s)
        if (c & rev).bit_count() & 1:
            prev = c
            c ^= b << (t - mm)
            if 2 * l <= t:
                l = t + 1 - l
                b = prev
                mm = t
    min_poly = polybits.reciprocal(c, l)
    return l, min_poly
