"""Exact integer primitives: divisors, valuations, primality, divisor-pair ratios.

Values are plain Python ints restricted to the natural range [1, 2**64 - 1].
Python integers are exact at any width, so intermediate products never wrap;
the 64-bit ceiling is enforced wherever a value crosses an API boundary.
"""

from __future__ import annotations

from fractions import Fraction

NATURAL_MAX = 2**64 - 1

# Deterministic Miller-Rabin witness set, exact for every n < 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


class NaturalRangeError(OverflowError):
    """A value fell outside the supported range [1, 2**64 - 1]."""


def ensure_natural(value: int, what: str = "value") -> int:
    """Check that `value` is an int in [1, NATURAL_MAX] and return it."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{what} must be >= 1, got {value}")
    if value > NATURAL_MAX:
        raise NaturalRangeError(f"{what} {value} exceeds {NATURAL_MAX}")
    return value


def v2(n: int) -> int:
    """Exponent of 2 in n (2-adic valuation); n must be positive."""
    return (n & -n).bit_length() - 1


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending, by trial division up to sqrt(n)."""
    ensure_natural(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def odd_divisors(n: int) -> list[int]:
    """Odd divisors of n, ascending.

    These are exactly the divisors of n >> v2(n); the first is 1 and the
    last is the odd part of n.
    """
    ensure_natural(n)
    k = n >> v2(n)
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
        d += 2
    large.reverse()
    return small + large


def divisors_below(n: int, bound: int) -> list[int]:
    """Divisors of n that are strictly less than `bound`, ascending."""
    ensure_natural(bound, "bound")
    return [d for d in divisors(n) if d < bound]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""
    ensure_natural(n)
    out = []
    e = v2(n)
    if e:
        out.append((2, e))
        n >>= e
    d = 3
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors_from_factorization(factors) -> list[int]:
    """Unsorted divisor list spanned by (prime, exponent) pairs."""
    divs = [1]
    for p, e in factors:
        pk = 1
        grown = []
        for _ in range(e):
            pk *= p
            grown.extend(d * pk for d in divs)
        divs += grown
    return divs


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact over the whole 64-bit range."""
    ensure_natural(n)
    if n in (2, 3):
        return True
    if n < 2 or n % 2 == 0 or n % 3 == 0:
        return False
    s = v2(n - 1)
    d = (n - 1) >> s
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(x: int) -> int:
    """Smallest prime strictly greater than x."""
    ensure_natural(x)
    if x < 2:
        return 2
    c = x + 1 + (x & 1)
    while c <= NATURAL_MAX:
        if is_prime(c):
            return c
        c += 2
    raise NaturalRangeError(f"no prime after {x} fits in the natural range")


def valuation(p: int, m: int) -> int:
    """Largest e with p**e dividing m; p must be prime."""
    ensure_natural(m, "m")
    if not is_prime(p):
        raise ValueError(f"valuation base must be prime, got {p}")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def central_divisor_ratio(k: int) -> Fraction:
    """Minimum of high/low over complementary divisor pairs low*high == k.

    The minimizing pair brackets sqrt(k): low is the largest divisor whose
    square does not exceed k, so no divisor of k lies strictly between the
    two.  Equals 1 exactly when k is a perfect square.  The result is an
    exact rational; callers compare it without ever touching floats.
    """
    ensure_natural(k)
    low = 1
    d = 1
    while d * d <= k:
        if k % d == 0:
            low = d
        d += 1
    return Fraction(k // low, low)
