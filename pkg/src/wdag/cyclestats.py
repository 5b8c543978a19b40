"""Exact permutation-cycle statistics and the identities they satisfy.

Three counting families, all exact big integers:

  stirling1(n, m)                permutations of n elements with m cycles
  stirling1_all_divisible(d,n,m) ... with every cycle length divisible by d
  stirling1_by_even(n, m, e)     ... with exactly e cycles of even length

The divisible and even-split families are each computed by two distinct
recurrences (cycle removal and short step) that are required to agree;
an exhaustive census of S_n is the external oracle for all three.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial


def rising_factorial(x: int, n: int) -> int:
    """x (x+1) ... (x+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    out = 1
    for i in range(n):
        out *= x + i
    return out


@lru_cache(maxsize=None)
def stirling1(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind."""
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0:
        return 0
    return stirling1(n - 1, m - 1) + (n - 1) * stirling1(n - 1, m)


@lru_cache(maxsize=None)
def _div_by_removal(d: int, n: int, m: int) -> int:
    # Remove the cycle containing the largest element; its length is a
    # multiple dk of d, chosen in (n-1)!/(n-dk)! ways.
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if n % d != 0 or m == 0:
        return 0
    total = 0
    for k in range(1, n // d + 1):
        total += (
            factorial(n - 1)
            // factorial(n - d * k)
            * _div_by_removal(d, n - d * k, m - 1)
        )
    return total


@lru_cache(maxsize=None)
def _div_by_step(d: int, n: int, m: int) -> int:
    # Step down by d: the cycle holding the top element either has length
    # exactly d or loses d of its members.
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if n % d != 0:
        return 0
    prev = n - d
    return rising_factorial(prev + 1, d - 1) * _div_by_step(
        d, prev, m - 1
    ) + rising_factorial(prev, d) * _div_by_step(d, prev, m)


def stirling1_all_divisible(d: int, n: int, m: int) -> int:
    """Permutations of n elements with m cycles, all lengths divisible by d."""
    if d < 1:
        raise ValueError("divisor must be positive")
    a = _div_by_removal(d, n, m)
    b = _div_by_step(d, n, m)
    if a != b:
        raise ArithmeticError(
            f"divisible-cycle recurrences disagree at d={d}, n={n}, m={m}: {a} != {b}"
        )
    return a


@lru_cache(maxsize=None)
def _even_by_step(n: int, m: int, e: int) -> int:
    # The cycle holding the top element has length 1, length 2, or length
    # greater than 2 (drop the top element and its successor).
    if n < 0 or m < 0 or e < 0:
        return 0
    if n == 0:
        return 1 if m == 0 and e == 0 else 0
    return (
        _even_by_step(n - 1, m - 1, e)
        + (n - 1) * _even_by_step(n - 2, m - 1, e - 1)
        + (n - 1) * (n - 2) * _even_by_step(n - 2, m, e)
    )


@lru_cache(maxsize=None)
def _even_by_removal(n: int, m: int, e: int) -> int:
    # Remove the whole cycle containing the top element, split by parity
    # of its length 2t+1 or 2t.
    if n < 0 or m < 0 or e < 0:
        return 0
    if n == 0:
        return 1 if m == 0 and e == 0 else 0
    total = 0
    for t in range(0, (n - 1) // 2 + 1):
        total += (
            factorial(n - 1)
            // factorial(n - 2 * t - 1)
            * _even_by_removal(n - 2 * t - 1, m - 1, e)
        )
    for t in range(1, n // 2 + 1):
        total += (
            factorial(n - 1)
            // factorial(n - 2 * t)
            * _even_by_removal(n - 2 * t, m - 1, e - 1)
        )
    return total


def stirling1_by_even(n: int, m: int, e: int) -> int:
    """Permutations of n elements with m cycles of which exactly e are even."""
    a = _even_by_step(n, m, e)
    b = _even_by_removal(n, m, e)
    if a != b:
        raise ArithmeticError(
            f"even-split recurrences disagree at n={n}, m={m}, e={e}: {a} != {b}"
        )
    return a


def cycle_type_census(n: int) -> dict[tuple[int, ...], int]:
    """Exhaustive census of S_n: sorted cycle type -> number of permutations.

    Brute-force oracle, independent of every recurrence above.
    """
    counts: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        seen = [False] * n
        lengths = []
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                length += 1
            lengths.append(length)
        key = tuple(sorted(lengths))
        counts[key] = counts.get(key, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Identity verification
# ---------------------------------------------------------------------------

IDENTITY_NAMES = ("rising_d", "all_odd", "some_even", "mandev", "mandev_minus_one")


@dataclass
class IdentityReport:
    name: str
    max_n: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_identity(name: str, max_n: int) -> IdentityReport:
    """Exact check of one cycle-statistics identity for all parameters up
    to max_n; the report lists every violation."""
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")
    report = IdentityReport(name=name, max_n=max_n)

    def check(ok: bool, detail: str) -> None:
        report.checked += 1
        if not ok:
            report.violations.append(detail)

    if name == "rising_d":
        # (dn)! x^{rising n} = n! sum_m c_d(dn, m) (xd)^m, cross-multiplied
        # to stay in integers.
        for d in (1, 2, 3):
            for n in range(1, max_n // d + 1):
                dn = d * n
                for x in range(1, 6):
                    lhs = factorial(dn) * rising_factorial(x, n)
                    rhs = factorial(n) * sum(
                        stirling1_all_divisible(d, dn, m) * (x * d) ** m
                        for m in range(0, n + 1)
                    )
                    check(lhs == rhs, f"d={d} n={n} x={x}: {lhs} != {rhs}")
    elif name == "all_odd":
        for n in range(1, max_n + 1):
            lhs = sum(2**m * stirling1_by_even(n, m, 0) for m in range(1, n + 1))
            check(lhs == 2 * factorial(n), f"n={n}: {lhs} != {2 * factorial(n)}")
    elif name == "some_even":
        for n in range(1, max_n + 1):
            lhs = sum(
                2**m * stirling1_by_even(n, m, e)
                for m in range(1, n + 1)
                for e in range(1, m + 1)
            )
            rhs = (n - 1) * factorial(n)
            check(lhs == rhs, f"n={n}: {lhs} != {rhs}")
    elif name == "mandev":
        for n in range(1, max_n + 1):
            lhs = sum(
                2**m * 2**e * stirling1_by_even(n, m, e)
                for m in range(1, n + 1)
                for e in range(1, m + 1)
            )
            k = n // 2
            if n % 2 == 0:
                rhs = factorial(2 * k) * (k * k + 2 * k - 1)
            else:
                rhs = factorial(2 * k + 1) * k * (k + 3)
            check(lhs == rhs, f"n={n}: {lhs} != {rhs}")
    else:  # mandev_minus_one
        for n in range(1, max_n + 1):
            lhs = sum(
                2**m * (2**e - 1) * stirling1_by_even(n, m, e)
                for m in range(1, n + 1)
                for e in range(1, m + 1)
            )
            rhs = factorial(n) * ((n + 1) // 2) * (n // 2)
            check(lhs == rhs, f"n={n}: {lhs} != {rhs}")
    return report
