"""Binary cyclic codes from the inverse-monomial and trinomial trace
sequences: field arithmetic, coset combinatorics, sequence analysis, code
construction, BCH certificates, and exact minimum distances."""

from .gf2m import FieldSpec, field_new
from .cosets import (
    CosetTable,
    D_set,
    DefiningSet,
    N_set,
    T_set,
    coset_table,
    epsilon,
    odd_part,
    u_value,
    v_value,
    verify_decomposition,
    verify_full_length,
    wt2,
)
from .sequences import (
    BinarySequence,
    berlekamp_massey,
    dft_support,
    ding_zhou_sequence,
    si_ding_sequence,
)
from .codes import (
    BinaryCyclicCode,
    CodeReport,
    build_code,
    code_D,
    code_S,
    code_TangDing,
    dual_defining_set,
    encode,
    is_codeword,
    min_distance_bz,
    min_distance_exhaustive,
    multiplier_equivalent,
)
from .minweight import DistanceResult
from .bounds import (
    BchCertificate,
    bch_bound,
    check_membership,
    conjecture_probe,
    run_lemma_suite,
    theorem_bound,
)

__version__ = "0.1.0"
