"""Command line entry point.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 precision error.
Floats are printed with 10 significant digits, rationals as ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from . import io
from .cyclic import herbrand_quotient
from .errors import InputError, PrecisionError, VerificationError
from .euler import QuadraticTorusReport, ZetaSComparison, norm_torus_report, zeta_s_comparison
from .generators import (
    random_cyclic_ses,
    random_exact_sequence,
    random_lattice_action,
    random_nine_diagram,
)
from .cyclic import CyclicModule
from .lattice import IntMatrix, smith_normal_form
from .lseries import LeadingValue, b1_chi, QuadraticCharacter
from .local import (
    LocalPlaceData,
    crosscheck_local,
    local_l_polynomial,
    local_leading_direct,
    local_leading_formula,
    local_order,
)
from .quadratic import QuadraticField, class_number_imaginary, is_fundamental_discriminant, is_squarefree
from .sequences import check_exactness, nu_real, torsion_alternating_product, verify_3x3

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_PRECISION = 0, 1, 2, 3

CSV_COLUMNS = (
    "d", "discriminant", "h", "w", "unit_norm", "ext1", "regulator_T", "w_T",
    "order_L0", "algebraic_L0", "analytic_L0", "error_L0",
    "algebraic_L1", "analytic_L1", "error_L1",
)


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def fmt_lead(v: LeadingValue) -> str:
    val = fmt(v.exact_value) if v.exact_value is not None else fmt(v.value)
    return f"{val} (order {v.order})"


def fmt_poly(p: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _print_matrix(name: str, m: IntMatrix) -> None:
    print(f"{name} =")
    for row in m.to_rows():
        print("  [" + " ".join(f"{x:>4d}" for x in row) + " ]")


# ---------------------------------------------------------------------------


def cmd_snf(args) -> int:
    a = io.matrix_from_record(io.load_json(args.matrix))
    sf = smith_normal_form(a)
    _print_matrix("D", sf.d)
    _print_matrix("U", sf.u)
    _print_matrix("V", sf.v)
    ok = sf.u @ a @ sf.v == sf.d
    print("invariant factors:", " ".join(str(x) for x in sf.invariants if x) or "(none)")
    print("check U*A*V == D:", "ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def _seq_case(seq) -> tuple[Fraction, Fraction]:
    report = check_exactness(seq)
    if not report:
        raise InputError(f"sequence is not exact at position {report.position}: {report.reason}")
    return nu_real(seq, check=False), torsion_alternating_product(seq)


def cmd_seqdet(args) -> int:
    if args.seq:
        seq = io.sequence_from_record(io.load_json(args.seq))
        nu, tor = _seq_case(seq)
        print("groups:", " -> ".join(str(g) for g in seq.groups))
        print("nu =", fmt(nu))
        print("torsion product =", fmt(tor))
        print("verdict:", "match" if nu == tor else "MISMATCH")
        return EXIT_OK if nu == tor else EXIT_VERIFY
    rng = random.Random(args.seed)
    for i in range(args.fuzz):
        seq = random_exact_sequence(rng, rng.randint(3, 6), bound=args.bound)
        nu, tor = _seq_case(seq)
        if nu != tor:
            print(f"case {i}: nu = {fmt(nu)} but torsion product = {fmt(tor)}")
            print(io.sequence_to_record(seq))
            return EXIT_VERIFY
    print(f"{args.fuzz} sequences (seed {args.seed}): all match")
    return EXIT_OK


def cmd_local(args) -> int:
    if args.place:
        place = io.place_from_record(io.load_json(args.place))
    else:
        if args.q is None or args.f is None or args.module is None:
            raise InputError("give --place FILE or all of --q, --f, --module")
        place = LocalPlaceData(args.q, args.f, io.module_from_record(io.load_json(args.module)))
    a, b = local_leading_formula(place), local_leading_direct(place)
    print("P(t) = det(1 - tF) =", fmt_poly(local_l_polynomial(place)))
    print("order at s=0 =", local_order(place))
    print("leading (Herbrand route) =", a)
    print("leading (direct route)   =", b)
    ok = crosscheck_local(place)
    print("crosscheck:", "ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def _parse_primes(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise InputError(f"bad prime list {text!r}") from exc


def _quadratic_job(job):
    d, tol, primes = job
    rep = norm_torus_report(d, tol)
    zeta = zeta_s_comparison(QuadraticField.from_d(d), primes, tol) if primes else None
    return rep, zeta


def _report_text(rep: QuadraticTorusReport, at: str, zeta: ZetaSComparison | None) -> list[str]:
    t = rep.torus
    lines = [f"K = Q(sqrt({rep.d})), discriminant {rep.discriminant}, {rep.signature}"]
    lines.append(f"  h_K = {rep.h}, w_K = {rep.w}")
    if rep.unit is not None:
        lines.append(f"  unit = {rep.unit}, norm {rep.unit.norm:+d}, log eps = {fmt(rep.unit.regulator)}")
    lines.append(f"  Hom = {t.hom_description} (rank {t.hom_rank}), [Ext^1] = {t.ext1_order}, "
                 f"R_T = {fmt(t.regulator_T)}, w_T = {t.w_T}")
    rows = []
    if at in ("0", "both"):
        rows.append(("L*(0)", rep.algebraic_L0, rep.analytic_L0, rep.abs_errors["L0"]))
    if at in ("1", "both"):
        rows.append(("L*(1)", rep.algebraic_L1, rep.analytic_L1, rep.abs_errors["L1"]))
    lines.append(f"  {'':6} {'algebraic':>24} {'analytic':>24} {'|error|':>12}")
    for name, alg, ana, err in rows:
        lines.append(f"  {name:6} {fmt_lead(alg):>24} {fmt_lead(ana):>24} {fmt(err):>12}")
    if at in ("0", "both"):
        lines.append(f"  signed: L*(0) = +{fmt(rep.algebraic_L0.value)} = chi_U(j_* T^)")
    if zeta is not None:
        lines.append(f"  zeta*_S(0), S = inf + {list(zeta.primes)}, place norms {list(zeta.place_norms)}")
        lines.append(f"    h_S R_S / w          = {fmt(zeta.via_chi.value)} (order {zeta.via_chi.order})")
        lines.append(f"    |zeta*_S L*_S(chi)|  = {fmt(zeta.via_l.value)} (order {zeta.via_l.order})")
        lines.append(f"    |error| = {fmt(zeta.abs_error)}, {'agree' if zeta.agree else 'DISAGREE'}")
    return lines


def _csv_row(rep: QuadraticTorusReport) -> list[str]:
    t = rep.torus
    return [
        str(rep.d), str(rep.discriminant), str(rep.h), str(rep.w),
        "" if rep.unit is None else f"{rep.unit.norm:+d}",
        str(t.ext1_order), fmt(t.regulator_T), str(t.w_T),
        str(rep.algebraic_L0.order), fmt(rep.algebraic_L0.value), fmt(rep.analytic_L0.value),
        fmt(rep.abs_errors["L0"]),
        fmt(rep.algebraic_L1.value), fmt(rep.analytic_L1.value), fmt(rep.abs_errors["L1"]),
    ]


def _quadratic_ds(args) -> list[int]:
    if args.d is not None:
        if args.d in (0, 1) or not is_squarefree(args.d):
            raise InputError(f"d = {args.d} is not a squarefree integer other than 0, 1")
        return [args.d]
    lo, hi = args.range
    if lo > hi:
        raise InputError("empty range")
    return [d for d in range(lo, hi + 1) if d not in (0, 1) and is_squarefree(d)]


def cmd_quadratic(args) -> int:
    ds = _quadratic_ds(args)
    primes = _parse_primes(args.remove_primes)
    jobs = [(d, args.tol, primes) for d in ds]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_quadratic_job, jobs))
    else:
        results = [_quadratic_job(j) for j in jobs]
    results.sort(key=lambda r: r[0].d)

    failed = False
    for rep, zeta in results:
        errs = [rep.abs_errors["L0"]] if args.at == "0" else (
            [rep.abs_errors["L1"]] if args.at == "1" else list(rep.abs_errors.values()))
        if any(e > args.tol for e in errs) or rep.algebraic_L0.order != rep.analytic_L0.order:
            failed = True
        if zeta is not None and not zeta.agree:
            failed = True

    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rep, _ in results:
            w.writerow(_csv_row(rep))
    else:
        for rep, zeta in results:
            print("\n".join(_report_text(rep, args.at, zeta)))
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# self test


def _suite_seq(rng, n, fault):
    for _ in range(n):
        seq = random_exact_sequence(rng, rng.randint(3, 6))
        nu, tor = nu_real(seq, check=False), torsion_alternating_product(seq)
        if fault:
            tor *= 2
        if nu != tor:
            return False
    return True


def _suite_diagrams(rng, n, fault):
    return all(verify_3x3(random_nine_diagram(rng)) for _ in range(n))


def _suite_local(rng, n, fault):
    for _ in range(n):
        sigma, order = random_lattice_action(rng)
        place = LocalPlaceData(rng.choice((2, 3, 4, 5, 7, 8, 9, 11, 25)), order, CyclicModule.lattice(sigma, order))
        if not crosscheck_local(place):
            return False
    return True


def _suite_herbrand(rng, n, fault):
    for _ in range(n):
        a, b, c = random_cyclic_ses(rng)
        if herbrand_quotient(b) != herbrand_quotient(a) * herbrand_quotient(c):
            return False
    return True


def _suite_bernoulli(rng, n, fault):
    for delta in range(-3, -n - 1, -1):
        if not is_fundamental_discriminant(delta):
            continue
        w = {-4: 4, -3: 6}.get(delta, 2)
        if -b1_chi(QuadraticCharacter(delta)) != Fraction(2 * class_number_imaginary(delta), w):
            return False
    return True


SUITES: tuple[tuple[str, Callable, int, int], ...] = (
    ("exact-sequence determinant", _suite_seq, 1000, 100),
    ("3x3 diagram", _suite_diagrams, 200, 30),
    ("local crosscheck", _suite_local, 500, 50),
    ("Herbrand multiplicativity", _suite_herbrand, 200, 30),
    ("Bernoulli class number sweep", _suite_bernoulli, 2000, 300),
)


def cmd_selftest(args) -> int:
    all_ok = True
    for i, (name, fn, full, quick) in enumerate(SUITES):
        n = quick if args.quick else full
        rng = random.Random(args.seed + i)
        start = time.perf_counter()
        ok = fn(rng, n, args.inject_fault)
        took = time.perf_counter() - start
        all_ok &= ok
        if args.timing:
            print(f"{'PASS' if ok else 'FAIL'}  {name:32} n={n:<5d} {took:6.2f}s")
        else:
            print(f"{'PASS' if ok else 'FAIL'}  {name:32} n={n}")
    return EXIT_OK if all_ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toric-lvalues", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("snf", help="Smith normal form of a matrix file")
    s.add_argument("--matrix", required=True, metavar="FILE")
    s.set_defaults(func=cmd_snf)

    s = sub.add_parser("seqdet", help="nu(E) vs torsion product for exact sequences")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", metavar="FILE")
    g.add_argument("--fuzz", type=int, metavar="N")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=50, help="entry bound for generated maps")
    s.set_defaults(func=cmd_seqdet)

    s = sub.add_parser("local", help="local L-factor and its leading term at s=0")
    s.add_argument("--place", metavar="FILE")
    s.add_argument("--q", type=int, help="residue field size")
    s.add_argument("--f", type=int, help="inertia degree")
    s.add_argument("--module", metavar="FILE")
    s.set_defaults(func=cmd_local)

    s = sub.add_parser("quadratic", help="special values for the norm-one torus of Q(sqrt d)")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int, help="squarefree d != 0, 1")
    g.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"), help="all squarefree d in [LO, HI]")
    s.add_argument("--at", choices=("0", "1", "both"), default="0", help="which special value to report")
    s.add_argument("--remove-primes", metavar="P,Q,...", help="unramified primes whose Euler factors are removed")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for --range")
    s.set_defaults(func=cmd_quadratic)

    s = sub.add_parser("selftest", help="run the property suites")
    s.add_argument("--quick", action="store_true", help="smaller suites")
    s.add_argument("--seed", type=int, default=2024)
    s.add_argument("--inject-fault", action="store_true", help="negative control: corrupt one suite")
    s.add_argument("--timing", action="store_true", help="also print wall time (not deterministic)")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
