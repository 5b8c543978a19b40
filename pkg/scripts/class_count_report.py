#!/usr/bin/env python3
"""Compare closed-form class counts against exhaustive orbit enumeration.

Usage:
    python scripts/class_count_report.py [--max-two 5] [--max-three 3]

Prints the two-vertex table and a per-family three-vertex comparison.
Mismatched rows mark places where the printed piecewise display misses
vertex-swap identifications; enumeration is authoritative there.
"""
from __future__ import annotations

import argparse

from wdag.digraph import DimensionFunction
from wdag.equivalence import count_equivalence_classes
from wdag.formulas import (
    brute_three_vertex_breakdown,
    count_classes_three_vertices,
    count_classes_two_vertices,
)


def two_vertex_table(max_n: int) -> None:
    print(f"two-vertex classes, dimensions up to {max_n}")
    print(f"{'n1':>3} {'n2':>3} {'closed':>7} {'brute':>6}")
    for n1 in range(1, max_n + 1):
        for n2 in range(n1, max_n + 1):
            closed = count_classes_two_vertices(n1, n2)
            brute = count_equivalence_classes(DimensionFunction.of(n1, n2))
            mark = "" if closed == brute else "   <-- MISMATCH"
            print(f"{n1:>3} {n2:>3} {closed:>7} {brute:>6}{mark}")
    print()


def three_vertex_table(max_n: int) -> None:
    print(f"three-vertex classes, dimensions up to {max_n}")
    for n1 in range(1, max_n + 1):
        for n2 in range(n1, max_n + 1):
            for n3 in range(n2, max_n + 1):
                formula = count_classes_three_vertices(n1, n2, n3)
                brute = brute_three_vertex_breakdown(n1, n2, n3)
                status = "ok" if formula.total == brute.total else "MISMATCH"
                print(
                    f"({n1},{n2},{n3}) [{formula.branch}] "
                    f"closed={formula.total} brute={brute.total} {status}"
                )
                if formula.total != brute.total:
                    for family in formula.per_type:
                        a, b = formula.per_type[family], brute.per_type[family]
                        flag = "" if a == b else "  <--"
                        print(f"    {family:<14} closed={a:>3} brute={b:>3}{flag}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-two", type=int, default=5)
    parser.add_argument("--max-three", type=int, default=3)
    args = parser.parse_args()
    two_vertex_table(args.max_two)
    three_vertex_table(args.max_three)


if __name__ == "__main__":
    main()
