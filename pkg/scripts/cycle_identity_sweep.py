#!/usr/bin/env python3
"""Sweep the cycle-statistics identities and print a compact value table.

Usage:
    python scripts/cycle_identity_sweep.py [--max-n 12]

Every identity is checked exactly (big integers, no rounding); a clean
sweep prints one ok line per identity.
"""
from __future__ import annotations

import argparse

from wdag.cyclestats import (
    IDENTITY_NAMES,
    stirling1,
    stirling1_all_divisible,
    stirling1_by_even,
    verify_identity,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()

    print(f"cycle-count table up to n={min(args.max_n, 8)}")
    print(f"{'n':>2} {'m':>2} {'c':>8} {'c_2':>6} {'c(.,.,0)':>9}")
    for n in range(min(args.max_n, 8) + 1):
        for m in range(n + 1):
            print(
                f"{n:>2} {m:>2} {stirling1(n, m):>8} "
                f"{stirling1_all_divisible(2, n, m):>6} "
                f"{stirling1_by_even(n, m, 0):>9}"
            )
    print()
    failures = 0
    for name in IDENTITY_NAMES:
        result = verify_identity(name, args.max_n)
        if result.ok:
            print(f"ok   {name}: {result.checked} parameter sets")
        else:
            failures += 1
            print(f"FAIL {name}: {result.violations[:3]}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
