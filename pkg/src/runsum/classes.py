"""Spectral classes: all numbers sharing a given length spectrum.

The class of n is determined by the shape of its spectrum:

* unmixed  -> an infinite geometric family {2**(v+i) * m : i >= 0},
* lopsided -> {n} alone (both the 2-part and the odd part are recoverable),
* balanced -> scale * E(S), plus scale * {p prime : p > max even} when the
  spectrum is non-excessive, where scale is half the largest even element
  and E(S) is the exceptional set.

Every class therefore has 1, 2 or infinitely many members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from runsum.arith import (
    NATURAL_MAX,
    NaturalRangeError,
    divisors,
    divisors_from_factorization,
    ensure_natural,
    factorize,
    is_prime,
    next_prime,
)
from runsum.spectrum import Shape, Spectrum, length_spectrum, shape_of


@dataclass(frozen=True)
class FiniteClass:
    members: tuple[int, ...]


@dataclass(frozen=True)
class PowerOfTwoFamily:
    """{2**(min_exponent + i) * odd_part : i >= 0}; min_exponent is the least
    e with 2**(e+1) > odd_part, so the smallest member is already unmixed."""

    odd_part: int
    min_exponent: int


@dataclass(frozen=True)
class PrimeScaledFamily:
    """extras, plus scale * p over primes p > prime_threshold.  Extras are
    stored already multiplied by scale."""

    scale: int
    prime_threshold: int
    extras: tuple[int, ...]


SpectralClass = FiniteClass | PowerOfTwoFamily | PrimeScaledFamily


@dataclass(frozen=True)
class PrimeExcess:
    """How far the powers of one odd prime inside the odd part outgrow the
    largest odd element."""

    prime: int
    set_power: int  # largest e with prime**e an element of the odd part
    max_element_power: int  # exponent of prime in the largest odd element

    @property
    def excess(self) -> int:
        return self.set_power - self.max_element_power


@dataclass(frozen=True)
class ExcessiveProfile:
    per_prime: tuple[PrimeExcess, ...]
    excessive_number: int  # product of prime**excess over all entries

    @property
    def excessive_primes(self) -> tuple[int, ...]:
        return tuple(pe.prime for pe in self.per_prime if pe.excess > 0)

    @property
    def is_excessive(self) -> bool:
        return self.excessive_number > 1

    def excess_of(self, p: int) -> int:
        for pe in self.per_prime:
            if pe.prime == p:
                return pe.excess
        return 0


def difference_set(spectrum: Spectrum) -> tuple[int, ...]:
    """The odd part with its |even part| smallest elements removed; empty if
    the even elements outnumber the odd ones."""
    if len(spectrum.evens) > len(spectrum.odds):
        return ()
    return spectrum.odds[len(spectrum.evens) :]


def largest_odd_factor_from_spectrum(spectrum: Spectrum) -> int:
    """Greatest odd factor of any number realizing this spectrum: the product
    of the extremes of the difference set.  Needs strictly more odd than even
    elements (unmixed or lopsided)."""
    if len(spectrum.odds) <= len(spectrum.evens):
        raise ValueError("needs more odd than even elements (difference set empty)")
    d = difference_set(spectrum)
    return d[0] * d[-1]


def _merged(f1: dict, f2: dict) -> dict:
    out = dict(f1)
    for p, e in f2.items():
        out[p] = out.get(p, 0) + e
    return out


def exceptional_set(spectrum: Spectrum) -> tuple[int, ...]:
    """Products of two odd elements that could extend the spectrum: the a in
    S1*S1 with a > max(S0) whose test divisor set, the divisors of a*max(S1)
    strictly below a, reproduces S1 exactly.  Ascending; at most two entries
    on true balanced spectra.

    Needs an even element (otherwise the a > max(S0) cut is undefined).
    """
    if not spectrum.evens:
        raise ValueError("exceptional set needs an even element")
    odds = spectrum.odds
    if not odds:
        return ()
    m0 = spectrum.m0
    m1 = spectrum.m1
    odd_set = set(odds)
    factors = {x: dict(factorize(x)) for x in odds}
    candidates: dict[int, tuple[int, int]] = {}
    for i, b in enumerate(odds):
        for c in odds[i:]:
            a = b * c
            if a > m0 and a not in candidates:
                candidates[a] = (b, c)
    result = []
    for a in sorted(candidates):
        b, c = candidates[a]
        a_fac = _merged(factors[b], factors[c])
        # a's maximal proper divisors must already be odd elements; this
        # follows from the test set equality and prunes nearly everything.
        if any(a // p not in odd_set for p in a_fac):
            continue
        below = [
            d
            for d in divisors_from_factorization(_merged(factors[m1], a_fac).items())
            if d < a
        ]
        below.sort()
        if tuple(below) == odds:
            result.append(a)
    return tuple(result)


def _divisor_closed(odd_set: set) -> bool:
    return all(d in odd_set for x in odd_set for d in divisors(x))


def excessive_profile(spectrum: Spectrum) -> ExcessiveProfile:
    """Per-prime excess data of a balanced spectrum.

    For each odd prime with a pure power among the odd elements: the largest
    such power, the prime's exponent in the largest odd element, and their
    difference (never negative on true spectra).  The excessive number is the
    product of primes raised to their excesses; the spectrum is excessive
    exactly when it exceeds 1, equivalently when the odd part holds more than
    the divisors of its maximum.
    """
    if shape_of(spectrum) is not Shape.BALANCED:
        raise ValueError("excess data is defined for balanced spectra only")
    odds = spectrum.odds
    m1 = spectrum.m1
    top_power: dict[int, int] = {}
    for x in odds:
        if x == 1:
            continue
        fac = factorize(x)
        if len(fac) == 1:
            p, e = fac[0]
            if e > top_power.get(p, 0):
                top_power[p] = e
    entries = []
    excessive_number = 1
    for p in sorted(top_power):
        gamma = top_power[p]
        mu = 0
        t = m1
        while t % p == 0:
            mu += 1
            t //= p
        if gamma < mu:
            raise ValueError(
                f"prime {p} reaches power {gamma} in the set but {mu} in max "
                f"element {m1}; not realizable as a spectrum"
            )
        entries.append(PrimeExcess(p, gamma, mu))
        excessive_number *= p ** (gamma - mu)
    profile = ExcessiveProfile(tuple(entries), excessive_number)
    odd_set = set(odds)
    if _divisor_closed(odd_set):
        # on true spectra: excessive <=> odd part strictly exceeds divisors(m1)
        assert profile.is_excessive == (odd_set != set(divisors(m1)))
    return profile


def _checked_member(x: int) -> int:
    if x > NATURAL_MAX:
        raise NaturalRangeError(f"class member {x} exceeds {NATURAL_MAX}")
    return x


def _min_exponent_for(m: int) -> int:
    """Least e with 2**(e+1) > m, for odd m."""
    return m.bit_length() - 1


def class_of_spectrum(spectrum: Spectrum, n: int) -> SpectralClass:
    """Spectral class from a number and its (precomputed) spectrum.  Scans
    call this directly with sieve-produced spectra; `spectral_class` is the
    plain entry point."""
    shape = shape_of(spectrum)
    if shape is Shape.UNMIXED:
        m1 = spectrum.m1
        return PowerOfTwoFamily(m1, _min_exponent_for(m1))
    if shape is Shape.LOPSIDED:
        return FiniteClass((n,))
    exceptional = exceptional_set(spectrum)
    profile = excessive_profile(spectrum)
    m0 = spectrum.m0
    assert m0 % 2 == 0
    scale = m0 // 2
    extras = tuple(_checked_member(scale * a) for a in exceptional)
    if profile.is_excessive:
        assert 1 <= len(extras) <= 2, "excessive class must have 1 or 2 members"
        return FiniteClass(extras)
    return PrimeScaledFamily(scale, m0, extras)


def spectral_class(n: int) -> SpectralClass:
    """The set of all numbers whose spectrum equals that of n, described in
    closed form."""
    ensure_natural(n)
    return class_of_spectrum(length_spectrum(n), n)


def class_contains(klass: SpectralClass, x: int) -> bool:
    ensure_natural(x, "x")
    if isinstance(klass, FiniteClass):
        return x in klass.members
    if isinstance(klass, PowerOfTwoFamily):
        if x % klass.odd_part:
            return False
        t = x // klass.odd_part
        return t & (t - 1) == 0 and t >= 1 << klass.min_exponent
    if x in klass.extras:
        return True
    if x % klass.scale:
        return False
    p = x // klass.scale
    return p > klass.prime_threshold and is_prime(p)


def class_enumerate(klass: SpectralClass, count: int) -> list[int]:
    """The `count` smallest members, ascending (fewer only if the class is
    finite and smaller).  Raises NaturalRangeError when a requested member
    would exceed the natural range."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if isinstance(klass, FiniteClass):
        return list(klass.members[:count])
    if isinstance(klass, PowerOfTwoFamily):
        return [
            _checked_member(klass.odd_part << (klass.min_exponent + i))
            for i in range(count)
        ]
    out: list[int] = []
    extras = klass.extras
    i = 0
    p = klass.prime_threshold
    pending = None  # next prime-scaled member, computed on demand
    while len(out) < count:
        if pending is None:
            p = next_prime(p)
            pending = _checked_member(klass.scale * p)
        if i < len(extras) and extras[i] <= pending:
            if extras[i] < pending:
                out.append(extras[i])
            i += 1
        else:
            out.append(pending)
            pending = None
    return out


def class_cardinality(klass: SpectralClass):
    """1, 2, or math.inf.  Finite classes can only have 1 or 2 members."""
    if isinstance(klass, FiniteClass):
        size = len(klass.members)
        assert size in (1, 2), f"finite class of impossible size {size}"
        return size
    return math.inf
