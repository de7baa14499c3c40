"""Range verification and witness scans.

One pass over [lo, hi] drives any number of named checks and witness
predicates.  Per-number state (factorization, spectrum, exceptional set,
excess profile, class) is assembled once from a smallest-prime-factor sieve
and shared between checks; the heavier pieces are lazy so spectra that no
check cares about cost almost nothing.

Ranges split into per-worker chunks; merging is deterministic regardless of
worker count: counterexamples concatenate in range order, witnesses take the
minimum per property.
"""

from __future__ import annotations

import math
import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from runsum import classes, inverse
from runsum.arith import (
    central_divisor_ratio,
    divisors,
    ensure_natural,
    factorize,
    is_prime,
    divisors_from_factorization,
)
from runsum.sieve import factorize_with_table, smallest_prime_factor_table
from runsum.spectrum import (
    Shape,
    Spectrum,
    length_spectrum,
    length_spectrum_bruteforce,
    structure_violations,
    v2_from_spectrum,
)

MAX_SCAN_LIMIT = 10**8  # sieve memory guard
COUNTEREXAMPLE_CAP = 25  # per property, per scan


class ScanPoint:
    """One number's view during a scan; exceptional set, excess profile,
    class, and the brute-force spectrum are computed on first use."""

    __slots__ = (
        "n",
        "nu",
        "odd_factors",
        "odds",
        "spectrum",
        "_exceptional",
        "_profile",
        "_klass",
        "_oracle",
    )

    def __init__(self, n, nu, odd_factors, odds, spectrum):
        self.n = n
        self.nu = nu
        self.odd_factors = odd_factors
        self.odds = odds
        self.spectrum = spectrum
        self._exceptional = None
        self._profile = None
        self._klass = None
        self._oracle = None

    @property
    def shape(self) -> Shape:
        n_even = len(self.spectrum.elements) - len(self.odds)
        if n_even == 0:
            return Shape.UNMIXED
        if n_even == len(self.odds):
            return Shape.BALANCED
        return Shape.LOPSIDED

    def exceptional(self) -> tuple[int, ...]:
        if self._exceptional is None:
            if self.spectrum.evens:
                self._exceptional = classes.exceptional_set(self.spectrum)
            else:
                self._exceptional = ()
        return self._exceptional

    def profile(self) -> classes.ExcessiveProfile:
        if self._profile is None:
            self._profile = classes.excessive_profile(self.spectrum)
        return self._profile

    def klass(self) -> classes.SpectralClass:
        if self._klass is None:
            self._klass = classes.class_of_spectrum(self.spectrum, self.n)
        return self._klass

    def oracle_spectrum(self) -> Spectrum:
        if self._oracle is None:
            self._oracle = length_spectrum_bruteforce(self.n)
        return self._oracle


def iter_points(lo: int, hi: int, spf=None):
    """Yield a ScanPoint for every n in [lo, hi] using a shared sieve."""
    if spf is None:
        spf = smallest_prime_factor_table(hi)
    for n in range(lo, hi + 1):
        nu = (n & -n).bit_length() - 1
        fac = factorize_with_table(n >> nu, spf)
        odds = divisors_from_factorization(fac)
        odds.sort()
        r = bisect_right(odds, isqrt(2 * n - 1))
        s1 = odds[:r]
        step = 2 << nu
        evens = [step * k for k in odds[: len(odds) - r]]
        sp = Spectrum(tuple(sorted(s1 + evens)))
        # pre-fill the parity views so checks never re-derive them
        s1 = tuple(s1)
        sp.__dict__["odds"] = s1
        sp.__dict__["evens"] = tuple(evens)
        yield ScanPoint(n, nu, fac, s1, sp)


# --- verify checks: True means the property held at this n ----------------


def _check_oracle_equivalence(pt: ScanPoint) -> bool:
    """Sieve path, plain path and brute-force oracle all agree."""
    return pt.spectrum == pt.oracle_spectrum() == length_spectrum(pt.n)


def _check_theorem4(pt: ScanPoint) -> bool:
    """Structural law of spectra, challenged on the brute-force spectrum:
    odd elements in the majority, even part = 2^(v+1) times the smallest
    odd elements with v recovering v2(n), odd part divisor-closed."""
    sp = pt.oracle_spectrum()
    if structure_violations(sp):
        return False
    return not sp.evens or v2_from_spectrum(sp) == pt.nu


def _power_of(value: int, base: int) -> int | None:
    """Exponent e >= 1 with base**e == value, else None."""
    e = 0
    while value > 1 and value % base == 0:
        value //= base
        e += 1
    return e if value == 1 and e >= 1 else None


def _check_exceptional_structure(pt: ScanPoint) -> bool:
    """Size and divisibility laws of exceptional sets of balanced spectra:
    at most two members, each composite with all proper divisors back in the
    odd part and a/m1 realizing the central divisor ratio of m1*a, every
    member divisible by the excessive number (and = it when that exceeds
    m1); the non-excessive case is exactly E empty or one prime power one
    step above its exponent in m1."""
    if pt.shape is not Shape.BALANCED:
        return True
    exceptional = pt.exceptional()
    if len(exceptional) > 2:
        return False
    profile = pt.profile()
    e_s = profile.excessive_number
    excessive = set(profile.excessive_primes)
    odd_set = set(pt.odds)
    m1 = pt.odds[-1]
    non_excessive_in_set = [pe.prime for pe in profile.per_prime if pe.excess == 0]
    q_max = max(non_excessive_in_set, default=None)
    for a in exceptional:
        if is_prime(a):
            return False
        if any(d not in odd_set for d in divisors(a)[:-1]):
            return False
        if central_divisor_ratio(m1 * a) != Fraction(a, m1):
            return False
        if a % e_s:
            return False
        e_a = 1
        for p, e in factorize(a):
            if p in excessive:
                e_a *= p**e
        n_a = a // e_a
        if e_a % e_s:
            return False
        if n_a > 1:
            if q_max is None or _power_of(n_a, q_max) is None:
                return False
            if e_a != e_s:
                return False
    if e_s > m1 and exceptional != (e_s,):
        return False
    # non-excessive <=> E empty or {q^(mu_q + 1)} for a single prime q
    singleton_form = False
    if len(exceptional) == 1:
        fac = factorize(exceptional[0])
        if len(fac) == 1:
            q, e = fac[0]
            mu = 0
            t = m1
            while t % q == 0:
                mu += 1
                t //= q
            singleton_form = e == mu + 1
    if (e_s == 1) != (not exceptional or singleton_form):
        return False
    return True


def _two_member_structure(pt: ScanPoint):
    """For |E| = 2: (p, gamma, excess, q, beta) per the two-member law, or
    None when the set does not fit it."""
    exceptional = pt.exceptional()
    if len(exceptional) != 2:
        return None
    profile = pt.profile()
    if len(profile.excessive_primes) != 1:
        return None
    p = profile.excessive_primes[0]
    entry = next(pe for pe in profile.per_prime if pe.prime == p)
    gamma, excess = entry.set_power, entry.excess
    if exceptional[0] != p ** (gamma + 1):
        return None
    q = max((pe.prime for pe in profile.per_prime if pe.excess == 0), default=None)
    if q is None:
        return None
    other = exceptional[1]
    beta = 0
    t = other
    while t % q == 0:
        t //= q
        beta += 1
    if beta < 1 or other != p**excess * q**beta:
        return None
    return p, gamma, excess, q, beta


def _check_two_member_form(pt: ScanPoint) -> bool:
    """Two-member exceptional sets: unique excessive prime p, members
    {p^(gamma+1), p^excess * q^beta} with p, q the two largest primes of the
    odd part; excess = gamma when p is the largest, beta = 1 when q is."""
    if pt.shape is not Shape.BALANCED or len(pt.exceptional()) != 2:
        return True
    structure = _two_member_structure(pt)
    if structure is None:
        return False
    p, gamma, excess, q, beta = structure
    primes_in_set = sorted(pe.prime for pe in pt.profile().per_prime)
    if len(primes_in_set) < 2 or {p, q} != set(primes_in_set[-2:]):
        return False
    if p == primes_in_set[-1] and excess != gamma:
        return False
    if q == primes_in_set[-1] and beta != 1:
        return False
    return True


def _check_trichotomy(pt: ScanPoint) -> bool:
    """Class sizes are 1, 2 or infinite, matching the shape: lopsided -> 1,
    unmixed or balanced non-excessive -> infinite, excessive -> |E|."""
    cardinality = classes.class_cardinality(pt.klass())
    shape = pt.shape
    if shape is Shape.UNMIXED:
        return cardinality == math.inf
    if shape is Shape.LOPSIDED:
        return cardinality == 1
    if pt.profile().is_excessive:
        return cardinality == len(pt.exceptional()) and cardinality in (1, 2)
    return cardinality == math.inf


def _check_round_trip(pt: ScanPoint) -> bool:
    """Inverting the spectrum reproduces the class, which contains n."""
    klass = pt.klass()
    return inverse.numbers_with_spectrum(
        pt.spectrum.elements
    ) == klass and classes.class_contains(klass, pt.n)


VERIFY_CHECKS = {
    "oracle-equivalence": _check_oracle_equivalence,
    "theorem-4": _check_theorem4,
    "E-size": _check_exceptional_structure,
    "prop-22": _check_two_member_form,
    "trichotomy": _check_trichotomy,
    "round-trip": _check_round_trip,
}


# --- witness predicates ----------------------------------------------------


def _wit_nonempty_exceptional(pt: ScanPoint) -> bool:
    return pt.shape is Shape.BALANCED and len(pt.exceptional()) > 0


def _wit_excessive(pt: ScanPoint) -> bool:
    return pt.shape is Shape.BALANCED and pt.profile().is_excessive


def _wit_two_member(pt: ScanPoint) -> bool:
    return pt.shape is Shape.BALANCED and len(pt.exceptional()) == 2


def _wit_all_primes_divide_max(pt: ScanPoint) -> bool:
    """Excessive spectrum whose odd primes all divide the largest odd
    element (so no prime is coprime to it)."""
    if pt.shape is not Shape.BALANCED:
        return False
    profile = pt.profile()
    if not profile.is_excessive:
        return False
    m1 = pt.odds[-1]
    return all(m1 % pe.prime == 0 for pe in profile.per_prime)


def _wit_all_odd_primes_excessive(pt: ScanPoint) -> bool:
    """Spectrum containing at least one odd prime, all of them excessive."""
    if pt.shape is not Shape.BALANCED:
        return False
    per_prime = pt.profile().per_prime
    return bool(per_prime) and all(pe.excess > 0 for pe in per_prime)


def _wit_beta_gt_1(pt: ScanPoint) -> bool:
    if pt.shape is not Shape.BALANCED:
        return False
    structure = _two_member_structure(pt)
    return structure is not None and structure[4] > 1


def _wit_gamma_beta_gt_1(pt: ScanPoint) -> bool:
    if pt.shape is not Shape.BALANCED:
        return False
    structure = _two_member_structure(pt)
    return structure is not None and structure[1] > 1 and structure[4] > 1


WITNESS_PREDICATES = {
    "nonempty-E": _wit_nonempty_exceptional,
    "excessive": _wit_excessive,
    "E-size-2": _wit_two_member,
    "all-primes-divide-m": _wit_all_primes_divide_max,
    "all-odd-primes-excessive": _wit_all_odd_primes_excessive,
    "beta-gt-1": _wit_beta_gt_1,
    "gamma-beta-gt-1": _wit_gamma_beta_gt_1,
}

EXTENDED_ONLY_WITNESSES = frozenset({"gamma-beta-gt-1"})


# --- scan driver -----------------------------------------------------------


@dataclass
class ScanReport:
    lo: int
    hi: int
    property_name: str
    counterexamples: list[int] = field(default_factory=list)
    witnesses: dict[str, int] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


@dataclass(frozen=True)
class ScanConfig:
    lo: int
    hi: int
    verify: tuple[str, ...] = ()
    witness: tuple[str, ...] = ()
    jobs: int = 1

    def __post_init__(self):
        ensure_natural(self.lo, "lo")
        if self.hi < self.lo:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]")
        if self.hi > MAX_SCAN_LIMIT:
            raise ValueError(f"scan limit {self.hi} exceeds {MAX_SCAN_LIMIT}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        for name in self.verify:
            if name not in VERIFY_CHECKS:
                raise ValueError(f"unknown verify property {name!r}")
        for name in self.witness:
            if name not in WITNESS_PREDICATES:
                raise ValueError(f"unknown witness property {name!r}")


def _scan_chunk(args):
    lo, hi, verify, witness = args
    spf = smallest_prime_factor_table(hi)
    counters: dict[str, list[int]] = {name: [] for name in verify}
    found: dict[str, int] = {}
    checks = [(name, VERIFY_CHECKS[name]) for name in verify]
    pending = [(name, WITNESS_PREDICATES[name]) for name in witness]
    for pt in iter_points(lo, hi, spf):
        for name, check in checks:
            bucket = counters[name]
            if len(bucket) < COUNTEREXAMPLE_CAP and not check(pt):
                bucket.append(pt.n)
        if pending:
            still = []
            for name, predicate in pending:
                if predicate(pt):
                    found[name] = pt.n
                else:
                    still.append((name, predicate))
            pending = still
            if not pending and not checks:
                break
    return counters, found


def _chunk_bounds(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    span = hi - lo + 1
    jobs = min(jobs, span)
    width = span // jobs
    extra = span % jobs
    bounds = []
    start = lo
    for i in range(jobs):
        end = start + width - 1 + (1 if i < extra else 0)
        bounds.append((start, end))
        start = end + 1
    return bounds


def run_scan(config: ScanConfig) -> list[ScanReport]:
    """Run every requested check/predicate in one pass and report per
    property.  Reports are identical for any jobs value."""
    started = time.perf_counter()
    chunks = [
        (a, b, config.verify, config.witness)
        for a, b in _chunk_bounds(config.lo, config.hi, config.jobs)
    ]
    if len(chunks) == 1:
        partials = [_scan_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(_scan_chunk, chunks))
    counters: dict[str, list[int]] = {name: [] for name in config.verify}
    witnesses: dict[str, int] = {}
    for chunk_counters, chunk_found in partials:
        for name, ns in chunk_counters.items():
            bucket = counters[name]
            bucket.extend(ns[: COUNTEREXAMPLE_CAP - len(bucket)])
        for name, n in chunk_found.items():
            if name not in witnesses or n < witnesses[name]:
                witnesses[name] = n
    elapsed = time.perf_counter() - started
    reports = [
        ScanReport(config.lo, config.hi, name, counters[name], {}, elapsed)
        for name in config.verify
    ]
    for name in config.witness:
        hit = {name: witnesses[name]} if name in witnesses else {}
        reports.append(ScanReport(config.lo, config.hi, name, [], hit, elapsed))
    return reports


def find_first(property_name: str, hi: int, lo: int = 1, jobs: int = 1):
    """Smallest n in [lo, hi] satisfying a witness predicate, or None."""
    config = ScanConfig(lo, hi, witness=(property_name,), jobs=jobs)
    report = run_scan(config)[0]
    return report.witnesses.get(property_name)


def _match_chunk(args):
    lo, hi, targets = args
    wanted = {t: [] for t in targets}
    max_len = max(len(t) for t in targets)
    max_elem = max(t[-1] for t in targets)
    spf = smallest_prime_factor_table(hi)
    for pt in iter_points(lo, hi, spf):
        elements = pt.spectrum.elements
        if len(elements) <= max_len and elements[-1] <= max_elem:
            if elements in wanted:
                wanted[elements].append(pt.n)
    return wanted


def find_spectrum_matches(targets, hi: int, lo: int = 1, jobs: int = 1):
    """Every n in [lo, hi] whose spectrum equals one of the target sets.

    Targets are arbitrary finite sets of naturals; the result maps each
    canonicalized target tuple to the (possibly empty) ascending list of
    matches.  Used to certify that rejected inverse inputs really have no
    preimage in a range.
    """
    canonical = [tuple(sorted(set(t))) for t in targets]
    if not canonical:
        return {}
    chunks = [(a, b, tuple(canonical)) for a, b in _chunk_bounds(lo, hi, jobs)]
    if len(chunks) == 1:
        partials = [_match_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(_match_chunk, chunks))
    merged: dict[tuple, list[int]] = {t: [] for t in canonical}
    for part in partials:
        for t, ns in part.items():
            merged[t].extend(ns)
    return merged
