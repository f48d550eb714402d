#!/usr/bin/env python3
"""Check every binomial family against exhaustive search, print one line each."""
import sys

from permbinom.theorems import f1_case, f2_case, f3_case, f4_case, h2_case, validate

CASES = [f1_case(3), f1_case(5), f2_case(2), f2_case(4), h2_case(2), h2_case(4),
         f3_case(2), f3_case(3), f4_case(2), f4_case(4)]


def main():
    failed = 0
    for case in CASES:
        rep = validate(case)
        failed += not rep.verified
        print(f"{case.tag:6s} q={case.q:<3d} i={case.exponent:<6d} "
              f"predicted={len(rep.predicted_set):<4d} brute={len(rep.brute_set):<4d} "
              f"{'ok' if rep.verified else 'MISMATCH'}  {rep.elapsed:.2f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
