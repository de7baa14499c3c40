"""From a finite set back to the numbers realizing it as a length spectrum.

Candidate-then-verify: the set pins down a unique smallest candidate n (how
depends on its parity split), and the set is a spectrum iff the candidate's
spectrum reproduces it, in which case the answer is the candidate's whole
spectral class.
"""

from __future__ import annotations

from runsum.arith import NATURAL_MAX, NaturalRangeError, next_prime, v2
from runsum.classes import (
    SpectralClass,
    difference_set,
    exceptional_set,
    spectral_class,
)
from runsum.spectrum import Spectrum, length_spectrum


def numbers_with_spectrum(values) -> SpectralClass | None:
    """The class of all numbers whose spectrum is exactly `values`, or None
    when the set is not a spectrum.

    Input is any finite iterable of naturals; it is deduplicated and sorted
    first, and elements < 1 raise ValueError (distinct from the None result).
    Sets that cannot be spectra on parity grounds are rejected before the
    candidate is built: no 1, even elements in the majority, or even elements
    with differing 2-adic valuations.  A candidate exceeding the natural
    range raises NaturalRangeError, since the verdict is then unknown.
    """
    sp = Spectrum.of(values)
    if not sp.elements or 1 not in sp:
        return None
    odds, evens = sp.odds, sp.evens
    if len(evens) > len(odds):
        return None
    if len({v2(e) for e in evens}) > 1:
        return None

    if not evens:
        m1 = sp.m1
        candidate = m1 << (m1.bit_length() - 1)  # 2**nu * m1, least unmixed
    elif len(evens) < len(odds):
        diff = difference_set(sp)
        doubled = evens[0] * diff[0] * diff[-1]
        assert doubled % 2 == 0
        candidate = doubled // 2
    else:
        exceptional = exceptional_set(sp)
        m0 = sp.m0
        doubled = m0 * (exceptional[0] if exceptional else next_prime(m0))
        assert doubled % 2 == 0
        candidate = doubled // 2

    if candidate > NATURAL_MAX:
        raise NaturalRangeError(f"candidate {candidate} exceeds {NATURAL_MAX}")
    if length_spectrum(candidate) == sp:
        return spectral_class(candidate)
    return None
