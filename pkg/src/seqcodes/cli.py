"""Command-line interface: construct codes, reproduce the distance tables,
run the verification suites, and inspect the sequences.

Exit codes: 0 success, 1 verification failure, 2 usage error.
Set SEQCODES_THREADS to pin the kernel thread count; identical configurations
produce byte-identical output.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import polybits
from .bounds import (
    bch_bound,
    default_multipliers,
    run_lemma_suite,
    theorem_bound,
)
from .codes import (
    CodeReport,
    build_code,
    code_D,
    code_S,
    code_TangDing,
    dual_defining_set,
    min_distance_bz,
    min_distance_exhaustive,
)
from .cosets import D_set, N_set, T_set, coset_table
from .gf2m import MAX_M, MIN_M, field_new
from .sequences import (
    berlekamp_massey,
    dft_support,
    ding_zhou_sequence,
    si_ding_sequence,
)

DEFAULT_BUDGET = 200_000_000  # enumeration work units, not wall time


class UsageError(Exception):
    pass


def _parse_int_list(text, what):
    """'4', '4:8', or '4,6,8' -> list of ints."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {what} specification {text!r}")


def _check_m(m):
    if not MIN_M <= m <= MAX_M:
        raise UsageError(f"m={m} outside supported range [{MIN_M}, {MAX_M}]")


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_family_code(family, m, h, parity):
    if family == "S":
        return code_S(m, parity)
    if family == "D":
        if h is None:
            raise UsageError("family D needs --h")
        return code_D(m, h, parity)
    if family == "TangDing":
        return code_TangDing(m, parity)
    raise UsageError(f"unknown family {family!r}")


def _distance(code, engine, budget, bch):
    """(d_exact, proven) or (None, None) when skipped/not requested."""
    if engine == "none":
        return None, None
    if engine == "exhaustive":
        return min_distance_exhaustive(code), True
    r = min_distance_bz(code, budget=None if engine == "exact" else budget,
                        lower_bound=bch.implied_bound)
    if engine == "auto" and not r.proven:
        return None, None
    return r.d, r.proven


def make_report(family, m, h, parity, engine="auto",
                budget=DEFAULT_BUDGET) -> CodeReport:
    code = _build_family_code(family, m, h, parity)
    cert = bch_bound(code.defining, default_multipliers(m))
    d_exact, proven = _distance(code, engine, budget, cert)
    return CodeReport(
        family=family, m=m, h=h, n=code.n, k=code.k,
        d_lower_bch=cert.implied_bound,
        bch_witness_multiplier=cert.multiplier,
        bch_run_start=cert.run_start,
        d_exact=d_exact, d_exact_proven=proven,
        generator_hex=polybits.to_hex(code.generator),
        generator_poly=polybits.to_monomial_str(code.generator),
    )


def cmd_code(args):
    reports = []
    for m in _parse_int_list(args.m, "--m"):
        _check_m(m)
        hs = [None]
        if args.family == "D":
            if args.h == "all":
                hs = list(range(1, math.ceil(m / 2) + 1))
            elif args.h is not None:
                hs = _parse_int_list(args.h, "--h")
        for h in hs:
            reports.append(make_report(args.family, m, h, args.parity,
                                       args.distance, args.budget))
    if args.format == "json":
        lines = [r.to_json() for r in reports]
    elif args.format == "csv":
        lines = [CodeReport.CSV_HEADER] + [r.to_csv_row() for r in reports]
    else:
        lines = []
        for r in reports:
            d = ("?" if r.d_exact is None
                 else (str(r.d_exact) if r.d_exact_proven else f"<={r.d_exact}"))
            lines.append(f"{r.family} m={r.m} h={r.h} [{r.n},{r.k}] "
                         f"d_bch>={r.d_lower_bch} d={d}")
            lines.append(f"  g = {r.generator_poly}")
            lines.append(f"  g hex = {r.generator_hex}")
    _emit(lines, args.out)
    return 0


def _table_cell(family, m, h, parity, budget):
    code = _build_family_code(family, m, h, parity)
    cert = bch_bound(code.defining, default_multipliers(m))
    lb = max(cert.implied_bound, theorem_bound(family, m, h, parity) or 0)
    d = None
    if budget > 0:
        r = min_distance_bz(code, budget=budget, lower_bound=cert.implied_bound)
        if r.proven:
            d = r.d
    return code.k, (str(d) if d is not None else f">={lb}")


def cmd_table(args):
    lines = []
    if args.which == 1:
        lines.append("m,dim_S1,d_S1,dim_S0,d_S0")
        for m in range(4, args.max_m + 1, 2):
            k1, d1 = _table_cell("S", m, None, 1, args.budget)
            k0, d0 = _table_cell("S", m, None, 0, args.budget)
            lines.append(f"{m},{k1},{d1},{k0},{d0}")
    else:
        lines.append("m,h,dim_D1,d_D1,dim_D0,d_D0")
        for m in range(4, args.max_m + 1, 2):
            for h in range(1, min(args.h_max, math.ceil(m / 2)) + 1):
                k1, d1 = _table_cell("D", m, h, 1, args.budget)
                k0, d0 = _table_cell("D", m, h, 0, args.budget)
                lines.append(f"{m},{h},{k1},{d1},{k0},{d0}")
    _emit(lines, args.out)
    return 0


# -- verification suites -------------------------------------------------

def _suite_counts(max_m):
    for m in range(MIN_M, max_m + 1):
        half = 1 << (m - 1)
        yield (f"|T({m},1)| = 2^{m - 1}", T_set(m, 1).size() == half)
        yield (f"|T({m},0)| = 2^{m - 1}-1", T_set(m, 0).size() == half - 1)
    for m in range(MIN_M, min(max_m, 16) + 1):
        for h in range(1, math.ceil(m / 2) + 1):
            ok = all(D_set(m, h, j).size() == T_set(m, j).size() for j in (0, 1))
            yield (f"|D({m},h={h},j)| = |T({m},j)|", ok)


def _suite_lemmas(max_m):
    for v in run_lemma_suite(min(max_m, 14)):
        yield (f"lemma {v['lemma_id']} m={v['m']} h={v['h']}",
               v["status"] == "pass")


def _suite_duality(max_m):
    for m in range(MIN_M, max_m + 1):
        t1, t0 = set(T_set(m, 1).expand()), set(T_set(m, 0).expand())
        n1, n0 = set(N_set(m, 1).expand()), set(N_set(m, 0).expand())
        if m % 2:
            yield (f"m={m}: T1 = N0+{{0}}", t1 == n0 | {0})
            yield (f"m={m}: T0 = N1", t0 == n1)
        else:
            yield (f"m={m}: T0 = N0+{{0}}", t0 == n0 | {0})
            yield (f"m={m}: T1 = N1", t1 == n1)
        if m % 2 and m <= 13:
            yield (f"m={m}: S0 = TangDing1",
                   code_S(m, 0).generator == code_TangDing(m, 1).generator)
            yield (f"m={m}: S1 = dual(TangDing1)",
                   dual_defining_set(N_set(m, 1)).same_roots(code_S(m, 1).defining))
        if m % 2 == 0 and m <= 12:
            yield (f"m={m}: S1 = dual(TangDing0)",
                   dual_defining_set(N_set(m, 0)).same_roots(code_S(m, 1).defining))
            yield (f"m={m}: S0 = dual(TangDing1)",
                   dual_defining_set(N_set(m, 1)).same_roots(code_S(m, 0).defining))
            yield (f"m={m}: defining(TangDing1) inside defining(S1)",
                   set(N_set(m, 1).expand()) <= set(code_S(m, 1).defining.expand()))


def _suite_sequences(max_m):
    for m in range(MIN_M, min(max_m, 14) + 1):
        field = field_new(m)
        specs = [("si-ding", None, si_ding_sequence(m), T_set(m, 1))]
        for h in range(1, math.ceil(m / 2) + 1):
            specs.append((f"ding-zhou h={h}", h, ding_zhou_sequence(m, h),
                          D_set(m, h, 1)))
        for name, h, seq, dset in specs:
            sup = dft_support(seq, field)
            ok_sup = sup == set(dset.expand().tolist())
            l, poly = berlekamp_massey(seq)
            ok_l = l == len(sup) == dset.size()
            ok_poly = poly == build_code(field, dset).generator
            yield (f"m={m} {name}: dft support = parity-1 set", ok_sup)
            yield (f"m={m} {name}: linear complexity = |support|", ok_l)
            yield (f"m={m} {name}: min poly = root product", ok_poly)


_SUITES = {
    "counts": (_suite_counts, 20),
    "lemmas": (_suite_lemmas, 14),
    "duality": (_suite_duality, 13),
    "sequences": (_suite_sequences, 12),
}


def cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    lines = []
    records = []
    blob = {}
    for name in names:
        suite, default_max = _SUITES[name]
        max_m = args.max_m or default_max
        for label, ok in suite(max_m):
            failures += not ok
            records.append({"suite": name, "check": label, "pass": bool(ok)})
            lines.append(f"{'ok  ' if ok else 'FAIL'} [{name}] {label}")
        if name == "lemmas":
            # the wire format for lemma verdicts: {lemma_id, m, h, status}
            blob["lemma_verdicts"] = run_lemma_suite(min(max_m, 14),
                                                     include_skips=True)
    summary = f"{len(records) - failures}/{len(records)} checks passed"
    if args.format == "json":
        blob.update({"checks": records, "summary": summary})
        _emit([json.dumps(blob, sort_keys=True)], args.out)
    else:
        _emit(lines + [summary], args.out)
    return 1 if failures else 0


def cmd_seq(args):
    _check_m(args.m)
    h = args.h
    seq = si_ding_sequence(args.m) if h is None else ding_zhou_sequence(args.m, h)
    field = field_new(args.m)
    if args.emit == "bits":
        lines = [seq.to_hex()]
    elif args.emit == "support":
        sup = dft_support(seq, field)
        table = coset_table(args.m)
        leaders = sorted({int(table.leader_of[i]) for i in sup})
        lines = [json.dumps({"size": len(sup), "leaders": leaders})]
    else:
        l, poly = berlekamp_massey(seq)
        lines = [json.dumps({"linear_complexity": l,
                             "min_poly_hex": polybits.to_hex(poly),
                             "min_poly": polybits.to_monomial_str(poly)})]
    _emit(lines, args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="seqcodes",
        description="binary cyclic codes from trace sequences: build, bound, "
                    "verify, reproduce tables")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("code", help="build codes and report parameters")
    c.add_argument("--family", required=True, choices=["S", "D", "TangDing"])
    c.add_argument("--m", required=True, help="degree: '5', '4:8' or '4,6,8'")
    c.add_argument("--h", default=None, help="trinomial parameter (family D): "
                                             "'1', '1:3', '1,2' or 'all'")
    c.add_argument("--parity", required=True, type=int, choices=[0, 1])
    c.add_argument("--distance", default="auto",
                   choices=["auto", "exact", "exhaustive", "none"])
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="exact-distance work budget in enumerated codewords")
    c.add_argument("--format", default="json", choices=["json", "csv", "text"])
    c.add_argument("--out", default=None)
    c.set_defaults(fn=cmd_code)

    t = sub.add_parser("table", help="reproduce a minimum-distance table")
    t.add_argument("--which", required=True, type=int, choices=[1, 2])
    t.add_argument("--max-m", dest="max_m", type=int, default=12)
    t.add_argument("--h-max", dest="h_max", type=int, default=2,
                   help="largest h column for table 2")
    t.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="per-code exact-distance budget; 0 = bounds only")
    t.add_argument("--out", default=None)
    t.set_defaults(fn=cmd_table)

    v = sub.add_parser("verify", help="run machine-verification suites")
    v.add_argument("--suite", required=True,
                   choices=["counts", "lemmas", "duality", "sequences", "all"])
    v.add_argument("--max-m", dest="max_m", type=int, default=None)
    v.add_argument("--format", default="text", choices=["text", "json"])
    v.add_argument("--out", default=None)
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("seq", help="emit a sequence view")
    s.add_argument("--m", required=True, type=int)
    s.add_argument("--h", type=int, default=None,
                   help="omit for the inverse-monomial family")
    s.add_argument("--emit", required=True,
                   choices=["bits", "support", "minpoly"])
    s.add_argument("--out", default=None)
    s.set_defaults(fn=cmd_seq)
    return p


def main(argv=None):
    threads = os.environ.get("SEQCODES_THREADS")
    if threads:
        import numba
        numba.set_num_threads(int(threads))
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
