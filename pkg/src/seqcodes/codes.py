"""Binary cyclic codes from coset-closed defining sets.

A code is stored by its length, defining set and generator polynomial (the
product of one GF(2) minimal polynomial per coset, times x-1 when a zero is
adjoined).  The builders wire the T/D/N splits to codes: the parity-1 family
member additionally adjoins the exponent 0 when m is even.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import polybits
from .cosets import D_set, DefiningSet, N_set, T_set, coset_table
from .gf2m import FieldSpec, field_new
from .minweight import DistanceResult, exhaustive_min_weight, bz_min_distance


def coset_minimal_poly(field: FieldSpec, leader: int) -> int:
    """prod over the coset of leader of (x - alpha^i), collapsed to GF(2)."""
    table = coset_table(field.m)
    coeffs = [1]
    for i in table.coset(leader):
        root = field.pow(field.alpha, i)
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] ^= c
            nxt[d] ^= field.mul(c, root)
        coeffs = nxt
    bad = [c for c in coeffs if c not in (0, 1)]
    if bad:
        raise AssertionError(f"minimal polynomial of C_{leader} not binary")
    return polybits.from_exponents(d for d, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class BinaryCyclicCode:
    n: int
    defining: DefiningSet
    generator: int
    k: int

    @property
    def m(self) -> int:
        return self.defining.m

    def field(self) -> FieldSpec:
        return field_new(self.m)

    def even_weight(self) -> bool:
        """True when x-1 divides the generator, forcing every codeword even."""
        return self.generator.bit_count() % 2 == 0

    def __str__(self):
        return f"[{self.n},{self.k}] cyclic, g = {polybits.to_monomial_str(self.generator)}"


def build_code(field: FieldSpec, dset: DefiningSet) -> BinaryCyclicCode:
    if dset.n != field.n:
        raise ValueError(f"defining set lives mod {dset.n}, field has n={field.n}")
    g = 1
    for leader in dset.leaders:
        g = polybits.clmul(g, coset_minimal_poly(field, leader))
    if dset.adjoin_zero:
        g = polybits.clmul(g, 0b11)  # x - 1
    deg = polybits.degree(g)
    if deg != dset.size():
        raise AssertionError("generator degree != defining set size")
    return BinaryCyclicCode(n=field.n, defining=dset, generator=g, k=field.n - deg)


def _delta(parity: int, m: int) -> bool:
    # the (x-1) factor is adjoined exactly for the parity-1 code at even m
    return parity == 1 and m % 2 == 0


def code_S(m: int, parity: int) -> BinaryCyclicCode:
    ds = T_set(m, parity)
    if _delta(parity, m):
        ds = DefiningSet(ds.n, ds.leaders, adjoin_zero=True)
    return build_code(field_new(m), ds)


def code_D(m: int, h: int, parity: int) -> BinaryCyclicCode:
    ds = D_set(m, h, parity)
    if _delta(parity, m):
        ds = DefiningSet(ds.n, ds.leaders, adjoin_zero=True)
    return build_code(field_new(m), ds)


def code_TangDing(m: int, parity: int) -> BinaryCyclicCode:
    return build_code(field_new(m), N_set(m, parity))


# The dual is taken in the reciprocal convention: defining set = complement
# of the expanded set, without negation.  This is the convention under which
# the subcode/dual identities between the sequence codes and the weight-split
# codes hold at odd m (checked at m=5); at even m the complement is closed
# under negation and both conventions coincide.
DUAL_CONVENTION = "complement"


def dual_defining_set(dset: DefiningSet) -> DefiningSet:
    """Defining set of the dual code: the complement of the expanded set,
    in canonical leader form (0 as a leader, no adjoin)."""
    n = dset.n
    mask = np.zeros(n, dtype=bool)
    mask[dset.expand()] = True
    return DefiningSet.from_residues(n, np.flatnonzero(~mask))


def multiplier_equivalent(set_a: DefiningSet, set_b: DefiningSet):
    """Smallest a with gcd(a, n) = 1 mapping the expanded A onto the expanded
    B by multiplication mod n, or None when the codes are not equivalent."""
    if set_a.n != set_b.n:
        raise ValueError("defining sets live mod different n")
    n = set_a.n
    ea = set_a.expand()
    eb = np.sort(set_b.expand())
    if len(ea) != len(eb):
        return None
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        if np.array_equal(np.sort(a * ea % n), eb):
            return a
    return None


def encode(code: BinaryCyclicCode, message) -> np.ndarray:
    """Multiply the message polynomial by the generator; returns n bits."""
    msg = np.asarray(message, dtype=np.uint8)
    if msg.shape != (code.k,):
        raise ValueError(f"message must hold k={code.k} bits")
    mpoly = polybits.from_exponents(np.flatnonzero(msg))
    cpoly = polybits.clmul(mpoly, code.generator)
    out = np.zeros(code.n, dtype=np.uint8)
    for i in range(code.n):
        out[i] = cpoly >> i & 1
    return out


def is_codeword(code: BinaryCyclicCode, word) -> bool:
    """Divisibility by the generator (equivalently: vanishing at every
    defining-set root)."""
    arr = np.asarray(word, dtype=np.uint8)
    if arr.shape != (code.n,):
        raise ValueError(f"word must hold n={code.n} bits")
    wpoly = polybits.from_exponents(np.flatnonzero(arr))
    return polybits.mod_poly(wpoly, code.generator) == 0


def min_distance_exhaustive(code: BinaryCyclicCode, max_k: int = 28) -> int:
    """Minimum Hamming weight by Gray-code enumeration of all 2^k - 1
    nonzero codewords; the independent oracle for the BZ engine."""
    if code.k > max_k:
        raise ValueError(f"k={code.k} exceeds the exhaustive limit {max_k}")
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    return exhaustive_min_weight(code.n, code.k, code.generator)


def min_distance_bz(code: BinaryCyclicCode, budget: int | None = None,
                    lower_bound: int = 0, window: int | None = None) -> DistanceResult:
    """Exact minimum distance via information-window enumeration with the
    cyclic-shift lower bound; `lower_bound` may carry an external certified
    bound (BCH) that tightens termination.  See minweight.bz_min_distance."""
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    return bz_min_distance(code.n, code.k, code.generator,
                           budget=budget, lower_bound=lower_bound,
                           even_code=code.even_weight(), window=window)


@dataclass
class CodeReport:
    """One constructed code with its certified parameters, serializable as a
    JSON object or CSV row (see README for the schema)."""

    family: str                 # "S" | "D" | "TangDing"
    m: int
    h: int | None
    n: int
    k: int
    d_lower_bch: int
    bch_witness_multiplier: int
    bch_run_start: int
    d_exact: int | None = None
    d_exact_proven: bool | None = None
    generator_hex: str = ""
    generator_poly: str = ""

    CSV_HEADER = ("family,m,h,n,k,d_lower_bch,bch_witness_multiplier,"
                  "bch_run_start,d_exact,d_exact_proven,generator_hex")

    def __post_init__(self):
        if self.d_exact is not None and self.d_exact < self.d_lower_bch:
            raise ValueError("exact distance below the certified BCH bound")

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)

    def to_csv_row(self) -> str:
        blank = lambda v: "" if v is None else v
        return (f"{self.family},{self.m},{blank(self.h)},{self.n},{self.k},"
                f"{self.d_lower_bch},{self.bch_witness_multiplier},"
                f"{self.bch_run_start},{blank(self.d_exact)},"
                f"{blank(self.d_exact_proven)},{self.generator_hex}")
