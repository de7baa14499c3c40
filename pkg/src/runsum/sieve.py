"""Smallest-prime-factor sieve backing the range scans.

Single-number queries elsewhere in the package stay on trial division; scans
over [lo, hi] factor every n through this table instead.
"""

from __future__ import annotations

from math import isqrt

import numpy as np


def smallest_prime_factor_table(limit: int) -> np.ndarray:
    """spf[i] = smallest prime factor of i for 2 <= i <= limit; spf[0] and
    spf[1] stay 0."""
    if limit > 2**32 - 1:
        raise ValueError(f"sieve limit {limit} too large for a uint32 table")
    spf = np.zeros(limit + 1, dtype=np.uint32)
    if limit >= 2:
        spf[2::2] = 2
        for p in range(3, isqrt(limit) + 1, 2):
            if spf[p] == 0:
                block = spf[p * p :: 2 * p]
                block[block == 0] = p
        unmarked = spf == 0
        unmarked[:2] = False
        spf[unmarked] = np.nonzero(unmarked)[0]
    return spf


def factorize_with_table(m: int, spf) -> list[tuple[int, int]]:
    """Prime factorization of m (>= 1) via the sieve table."""
    out = []
    while m > 1:
        p = int(spf[m])
        e = 1
        m //= p
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    return out
