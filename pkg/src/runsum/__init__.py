"""Decompositions of naturals into runs of consecutive integers, their
length spectra, and the classes of numbers sharing a spectrum."""

from runsum.arith import (
    NATURAL_MAX,
    NaturalRangeError,
    central_divisor_ratio,
    divisors,
    divisors_below,
    is_prime,
    next_prime,
    odd_divisors,
    valuation,
)
from runsum.classes import (
    ExcessiveProfile,
    FiniteClass,
    PowerOfTwoFamily,
    PrimeExcess,
    PrimeScaledFamily,
    SpectralClass,
    class_cardinality,
    class_contains,
    class_enumerate,
    difference_set,
    exceptional_set,
    excessive_profile,
    largest_odd_factor_from_spectrum,
    spectral_class,
)
from runsum.inverse import numbers_with_spectrum
from runsum.spectrum import (
    Decomposition,
    Shape,
    Spectrum,
    decompositions,
    length_spectrum,
    length_spectrum_bruteforce,
    shape_of,
    shape_of_number,
    structure_violations,
    v2_from_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "NATURAL_MAX",
    "NaturalRangeError",
    "central_divisor_ratio",
    "divisors",
    "divisors_below",
    "is_prime",
    "next_prime",
    "odd_divisors",
    "valuation",
    "Decomposition",
    "Shape",
    "Spectrum",
    "decompositions",
    "length_spectrum",
    "length_spectrum_bruteforce",
    "shape_of",
    "shape_of_number",
    "structure_violations",
    "v2_from_spectrum",
    "ExcessiveProfile",
    "FiniteClass",
    "PowerOfTwoFamily",
    "PrimeExcess",
    "PrimeScaledFamily",
    "SpectralClass",
    "class_cardinality",
    "class_contains",
    "class_enumerate",
    "difference_set",
    "exceptional_set",
    "excessive_profile",
    "largest_odd_factor_from_spectrum",
    "spectral_class",
    "numbers_with_spectrum",
]
