#!/usr/bin/env python3
"""Certify by exhaustive scan that 21434375 = 5^5 * 19^3 is the smallest
number whose spectrum has a two-member exceptional set with both exponents
above 1 (the top prime power's exponent and the trailing prime's).

Equivalent to `runsum witness gamma-beta-gt-1 --max 21434375 --extended`.
Expect several minutes of sieve-backed scanning on one core.
"""

import argparse
import time

from runsum.scan import find_first

EXPECTED = 21434375


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=EXPECTED)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    started = time.perf_counter()
    hit = find_first("gamma-beta-gt-1", args.max, jobs=args.jobs)
    elapsed = time.perf_counter() - started
    print(f"smallest witness <= {args.max}: {hit} ({elapsed:.0f}s)")
    if args.max >= EXPECTED:
        assert hit == EXPECTED, f"expected {EXPECTED}, scan found {hit}"
        print(f"minimality of {EXPECTED} certified")


if __name__ == "__main__":
    main()
