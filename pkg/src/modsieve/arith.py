"""Exact integer arithmetic: distinct prime factors, gcd, lcm.

Everything here runs on Python ints, which are arbitrary precision, so the
squared-lcm terms the criterion builds (lcm(x, y)**2 can exceed 2**64 for
the larger golden types) can never overflow or wrap.
"""

import math


def prime_factors(n: int) -> set[int]:
    """Return the set of distinct prime divisors of n; empty for n = 1.

    Trial division by 2, 3, then 6k +- 1 candidates up to sqrt(n). That is
    plenty for this sieve: type entries stay below 10**6 and the worst case
    is ~sqrt(n)/3 divisions. Not meant as general-purpose factorization.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"prime_factors requires an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"prime_factors requires n >= 1, got {n}")
    factors = set()
    for p in (2, 3):
        if n % p == 0:
            factors.add(p)
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                factors.add(p)
                while n % p == 0:
                    n //= p
        f += 6
    if n > 1:
        factors.add(n)
    return factors


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative ints, not both zero."""
    if a < 0 or b < 0:
        raise ValueError(f"gcd requires nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive ints, exact."""
    if a < 1 or b < 1:
        raise ValueError(f"lcm requires positive integers, got ({a}, {b})")
    return a * b // math.gcd(a, b)
