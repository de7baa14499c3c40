#!/usr/bin/env python3
"""Walk the showcase numbers end to end: spectrum, shape, exceptional set,
excess data, spectral class, and the inverse round trip."""

from runsum.classes import (
    class_cardinality,
    class_enumerate,
    exceptional_set,
    excessive_profile,
    spectral_class,
)
from runsum.inverse import numbers_with_spectrum
from runsum.spectrum import Shape, length_spectrum, shape_of

SHOWCASE = [1, 3, 9, 21, 45, 75, 90, 175, 2673, 9261, 36125, 21434375]


def main():
    for n in SHOWCASE:
        sp = length_spectrum(n)
        shape = shape_of(sp)
        print(f"n = {n}")
        print(f"  spectrum    = {sp}")
        print(f"  shape       = {shape.value}")
        if sp.evens:
            print(f"  exceptional = {set(exceptional_set(sp)) or '{}'}")
        if shape is Shape.BALANCED:
            prof = excessive_profile(sp)
            marks = ", ".join(
                f"{pe.prime}^{pe.set_power} vs {pe.prime}^{pe.max_element_power} in {sp.m1}"
                for pe in prof.per_prime
            )
            print(f"  excess      = {prof.excessive_number} ({marks or 'no odd primes'})")
        klass = spectral_class(n)
        print(f"  class       = {klass}")
        print(f"  cardinality = {class_cardinality(klass)}")
        print(f"  members     = {class_enumerate(klass, 8)}")
        assert numbers_with_spectrum(sp.elements) == klass
        print("  inverse round trip ok")
        print()


if __name__ == "__main__":
    main()
