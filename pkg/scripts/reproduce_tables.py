#!/usr/bin/env python3
"""Search every GF(2^n) for n in a range and write one report per field.

    python3 scripts/reproduce_tables.py --lo 4 --hi 12 --out results/
"""
import argparse
import time
from pathlib import Path

from permbinom.field import build_field
from permbinom.report import write_report
from permbinom.search import SearchConfig, search_field


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--lo", type=int, default=4)
    p.add_argument("--hi", type=int, default=12)
    p.add_argument("--tester", default="auto")
    p.add_argument("--workers", type=int)
    p.add_argument("--out", default="results")
    args = p.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(args.lo, args.hi + 1):
        t0 = time.perf_counter()
        recs = search_field(SearchConfig(n, tester=args.tester, skip_linearized=True,
                                         workers=args.workers))
        dt = time.perf_counter() - t0
        write_report(build_field(n), recs, "json", out / f"gf2_{n}.json")
        rows = " ".join(f"{r.i}({r.index_d})" for r in recs) or "none"
        print(f"n={n:2d}  {len(recs):3d} rows  {dt:7.2f}s  {rows}")


if __name__ == "__main__":
    main()
