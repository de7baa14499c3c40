"""Consecutive-run decompositions of a natural number and their length spectrum.

A decomposition of n is a run first, first+1, ..., first+length-1 of naturals
(first >= 1) summing to n.  Each odd divisor k of n yields exactly one run:
of length k when k*k < 2n, of length 2n/k when k*k > 2n (k*k == 2n cannot
happen for odd k).  The length spectrum of n is the set of lengths of all its
runs; it always contains 1 via the trivial run (n).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from runsum.arith import (
    central_divisor_ratio,
    divisors,
    ensure_natural,
    odd_divisors,
    v2,
)


@dataclass(frozen=True)
class Decomposition:
    """A run of consecutive naturals summing to `target`, stored losslessly
    as (first, length) rather than a materialized term list."""

    first: int
    length: int
    target: int

    def __post_init__(self):
        ensure_natural(self.first, "first term")
        ensure_natural(self.length, "length")
        total = self.length * self.first + self.length * (self.length - 1) // 2
        if total != self.target:
            raise ValueError(
                f"run {self.first}..{self.last} sums to {total}, not {self.target}"
            )

    @property
    def last(self) -> int:
        return self.first + self.length - 1

    @property
    def parity(self) -> str:
        return "odd" if self.length % 2 else "even"

    @property
    def odd_factor(self) -> int:
        """The odd divisor of the target that generates this run."""
        return self.length if self.length % 2 else 2 * self.target // self.length

    def terms(self) -> range:
        return range(self.first, self.first + self.length)


class Shape(Enum):
    """Parity balance of a spectrum: no even elements, equally many even and
    odd elements, or strictly in between.  {1} counts as unmixed."""

    UNMIXED = "unmixed"
    BALANCED = "balanced"
    LOPSIDED = "lopsided"


@dataclass(frozen=True)
class Spectrum:
    """An ascending, duplicate-free set of lengths.

    Instances built by `length_spectrum` satisfy the structural invariants of
    true spectra; `Spectrum.of` accepts arbitrary finite sets and leaves
    validation to `structure_violations`, so that the inverse computation can
    ingest and then reject junk.
    """

    elements: tuple[int, ...]

    @staticmethod
    def of(values) -> "Spectrum":
        elems = sorted({ensure_natural(v, "spectrum element") for v in values})
        return Spectrum(tuple(elems))

    @cached_property
    def odds(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if x % 2)

    @cached_property
    def evens(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if x % 2 == 0)

    @property
    def m0(self):
        """Largest even element, or None."""
        return self.evens[-1] if self.evens else None

    @property
    def m1(self):
        """Largest odd element, or None."""
        return self.odds[-1] if self.odds else None

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.elements) + "}"


def decompositions(n: int) -> list[Decomposition]:
    """All runs of consecutive naturals summing to n, shortest first.

    One run per odd divisor k of n: for k*k < 2n the run is centered at n/k
    with length k; for k*k > 2n it starts at (k-1)/2 - n/k + 1 with length
    2n/k.  First terms are >= 1 by construction (Decomposition validates).
    """
    ensure_natural(n)
    two_n = 2 * n
    out = []
    for k in odd_divisors(n):
        ksq = k * k
        assert ksq != two_n, "odd square cannot equal an even number"
        if ksq < two_n:
            out.append(Decomposition(n // k - (k - 1) // 2, k, n))
        else:
            out.append(Decomposition((k - 1) // 2 - n // k + 1, two_n // k, n))
    out.sort(key=lambda d: d.length)
    return out


def length_spectrum(n: int) -> Spectrum:
    """The set of run lengths of n.

    Equals {k odd, k | n, k*k < 2n} union {2n/k : k odd, k | n, k*k > 2n};
    the even part is 2**(v2(n)+1) times the smallest odd lengths.
    """
    ensure_natural(n)
    odds = odd_divisors(n)
    two_n = 2 * n
    small = [k for k in odds if k * k < two_n]
    large = [two_n // k for k in odds if k * k > two_n]
    large.reverse()
    sp = Spectrum(tuple(sorted(small + large)))
    assert small[0] == 1
    assert len(large) <= len(small)
    assert large == [(2 << v2(n)) * k for k in odds[: len(large)]]
    return sp


def length_spectrum_bruteforce(n: int) -> Spectrum:
    """Independent spectrum oracle: try every length directly.

    Walks l = 1, 2, ... while l(l+1)/2 <= n and keeps l whenever
    n - l(l-1)/2 is divisible by l, i.e. a first term >= 1 exists.  Uses no
    divisor correspondence at all.
    """
    ensure_natural(n)
    lengths = []
    l, tri = 1, 0  # tri == l*(l-1)//2
    while tri + l <= n:
        if (n - tri) % l == 0:
            lengths.append(l)
        tri += l
        l += 1
    return Spectrum(tuple(lengths))


def shape_of(spectrum: Spectrum) -> Shape:
    n_even = len(spectrum.evens)
    if n_even == 0:
        return Shape.UNMIXED
    if n_even == len(spectrum.odds):
        return Shape.BALANCED
    return Shape.LOPSIDED


def shape_of_number(n: int) -> Shape:
    """Shape of length_spectrum(n) straight from n = 2**a * k, k odd:
    unmixed iff 2**(a+1) > k, balanced iff the central divisor ratio of k
    exceeds 2**(a+1) (exact rational comparison), else lopsided."""
    ensure_natural(n)
    a = v2(n)
    k = n >> a
    threshold = 2 << a
    if threshold > k:
        return Shape.UNMIXED
    if central_divisor_ratio(k) > threshold:
        return Shape.BALANCED
    return Shape.LOPSIDED


def v2_from_spectrum(spectrum: Spectrum):
    """Recover v2 of any number realizing this spectrum: one less than the
    shared 2-adic valuation of the even elements.  None if there are no even
    elements; ValueError if their valuations disagree (not a spectrum)."""
    if not spectrum.evens:
        return None
    vals = {v2(e) for e in spectrum.evens}
    if len(vals) != 1:
        raise ValueError(f"even elements disagree on 2-adic valuation: {spectrum}")
    return vals.pop() - 1


def structure_violations(spectrum: Spectrum) -> list[str]:
    """Why a finite set cannot be a length spectrum; empty when it passes.

    Checks the necessary structure: contains 1, no majority of even elements,
    even elements share one 2-adic valuation, the even part is 2**(v+1) times
    the smallest odd elements, and the odd part is closed under divisors.
    """
    out = []
    if 1 not in spectrum.elements:
        out.append("1 is missing (every number has the trivial run)")
    odds, evens = spectrum.odds, spectrum.evens
    if len(evens) > len(odds):
        out.append("more even than odd elements")
    if evens:
        vals = {v2(e) for e in evens}
        if len(vals) != 1:
            out.append("even elements have differing 2-adic valuations")
        else:
            step = 1 << vals.pop()
            if list(evens) != [step * k for k in odds[: len(evens)]]:
                out.append("even part is not 2^(v+1) times the smallest odd elements")
    odd_set = set(odds)
    for x in odds:
        if any(d not in odd_set for d in divisors(x) if d % 2):
            out.append(f"odd part is not divisor-closed at {x}")
            break
    return out
