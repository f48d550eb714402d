"""Command-line entry point.

    permbinom search --n 6 --skip-linearized
    permbinom verify --case f2 --base-n 2
    permbinom index --n 12 --i 1846
    permbinom hermite --n 6 --i 10 --a 0x2 --t all
    permbinom test --n 6 --i 43 --a 0x2

Exit status: 0 success / verified, 1 discrepancy found, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys

from . import report
from .agw import compute_index, is_pp_via_agw
from .field import build_field
from .permtest import BinomialSpec, hermite_power_sum, is_pp_direct, is_pp_hermite, root_count_check
from .search import HERMITE_MAX_N, TESTERS, SearchConfig, make_record, search_field
from .theorems import CASES, validate


class UsageError(Exception):
    pass


def _hex(text: str) -> int:
    try:
        if not text.lower().startswith("0x"):
            raise ValueError
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed hex element {text!r} (expected 0x...)")


def _range(text: str) -> tuple[int, int]:
    try:
        for sep in ("-", ":"):
            if sep in text:
                lo, hi = text.split(sep)
                return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed exponent range {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permbinom",
                                description="Permutation binomials x^i + a x over GF(2^n)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="classify every exponent over GF(2^n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tester", choices=TESTERS, default="auto")
    s.add_argument("--skip-linearized", action="store_true")
    s.add_argument("--i", type=_range, dest="i_range", help="lo-hi, inclusive")
    s.add_argument("--no-reduction", action="store_true",
                   help="test every coefficient instead of one per equivalence class")
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.add_argument("--format", choices=("json", "csv"), default="json")

    v = sub.add_parser("verify", help="validate one binomial family against brute force")
    v.add_argument("--case", choices=sorted(CASES), required=True)
    v.add_argument("--base-n", type=int, required=True)
    v.add_argument("--tester", choices=("direct", "agw"))
    v.add_argument("--out")

    ix = sub.add_parser("index", help="index decomposition of x^i + a x")
    ix.add_argument("--n", type=int, required=True)
    ix.add_argument("--i", type=int, required=True)

    h = sub.add_parser("hermite", help="Hermite coefficients of (x^i + a x)^t")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--i", type=int, required=True)
    h.add_argument("--a", type=_hex, required=True)
    h.add_argument("--t", default="all")

    t = sub.add_parser("test", help="run every tester on one binomial")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--i", type=int, required=True)
    t.add_argument("--a", type=_hex, required=True)
    return p


def _binomial(n: int, i: int, a: int) -> BinomialSpec:
    try:
        spec = build_field(n)
        spec.check(a)
        return BinomialSpec(spec, i, a)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_search(args) -> int:
    config = SearchConfig(n=args.n, tester=args.tester, skip_linearized=args.skip_linearized,
                          i_range=args.i_range, a_reduction=not args.no_reduction,
                          workers=args.workers)
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc))
    records = search_field(config)
    spec = build_field(args.n)
    if args.out:
        report.write_report(spec, records, args.format, args.out)
    if args.format == "csv" and not args.out:
        sys.stdout.write(report.to_csv(spec, records))
        return 0
    h = spec.header()
    print(f"GF(2^{h['n']}) reduction_poly={h['reduction_poly']} generator={h['generator']}")
    print(f"{'i':>6} {'index':>6} {'lin':>4} {'#a':>6}  tags")
    for r in records:
        print(f"{r.i:>6} {r.index_d:>6} {'y' if r.linearized else '-':>4} "
              f"{r.valid_count:>6}  {' '.join(r.theorem_tags)}")
    print(f"{len(records)} rows")
    return 0


def cmd_verify(args) -> int:
    try:
        case = CASES[args.case](args.base_n)
        rep = validate(case, args.tester)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"{case.tag} base_n={case.base_n} exponent={case.exponent} over GF(2^{case.n})")
    print(f"predicted={len(rep.predicted_set)} brute={len(rep.brute_set)} "
          f"discrepancies={len(rep.discrepancies)} ({rep.elapsed:.3f}s)")
    for k, v in rep.notes.items():
        print(f"  {k}: {v}")
    if args.out:
        spec = build_field(case.n)
        rows = [make_record(spec, case.exponent, rep.brute_set)] if rep.brute_set else []
        report.write_report(spec, rows, "json", args.out, report.validation_extra(rep))
    print("verified" if rep.verified else "DISCREPANCY")
    return 0 if rep.verified else 1


def cmd_index(args) -> int:
    try:
        form = compute_index(build_field(args.n), args.i)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"i={form.i} s={form.s} d={form.d} e={form.e}")
    print(f"index {form.d}")
    return 0


def cmd_hermite(args) -> int:
    b = _binomial(args.n, args.i, args.a)
    q = b.field.q
    if args.t == "all":
        if args.n > HERMITE_MAX_N:
            raise UsageError(f"--t all refused for n > {HERMITE_MAX_N}")
        print(f"root_count_check {root_count_check(b)}")
        nonzero = [t for t in range(1, q - 1) if hermite_power_sum(b, t)]
        print(f"nonzero t: {nonzero[:32]}{' ...' if len(nonzero) > 32 else ''}")
        print(f"is_pp_hermite {is_pp_hermite(b)}")
        return 0
    try:
        t = int(args.t)
        coeff = hermite_power_sum(b, t)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"t={t} coefficient {hex(coeff)}")
    return 0


def cmd_test(args) -> int:
    b = _binomial(args.n, args.i, args.a)
    print(f"direct {is_pp_direct(b)}")
    print(f"agw {is_pp_via_agw(b.field, b.i, b.a)}")
    print(f"root_count_check {root_count_check(b)}")
    if args.n <= HERMITE_MAX_N:
        print(f"hermite {is_pp_hermite(b)}")
    return 0


COMMANDS = {"search": cmd_search, "verify": cmd_verify, "index": cmd_index,
            "hermite": cmd_hermite, "test": cmd_test}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"permbinom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
