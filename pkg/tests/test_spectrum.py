import pytest
from hypothesis import given
from hypothesis import strategies as st

from runsum.arith import odd_divisors, v2
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


def naive_decompositions(n):
    """Every (first, length) run summing to n, by direct double loop."""
    out = []
    for first in range(1, n + 1):
        total = 0
        term = first
        while total < n:
            total += term
            term += 1
        if total == n:
            out.append((first, term - first))
    return sorted(out, key=lambda fl: fl[1])


def test_decompositions_of_45_match_published_table():
    rows = [(d.first, d.length) for d in decompositions(45)]
    assert rows == [(45, 1), (22, 2), (14, 3), (7, 5), (5, 6), (1, 9)]
    assert list(decompositions(45)[3].terms()) == [7, 8, 9, 10, 11]


def test_decompositions_examples():
    assert [(d.first, d.length) for d in decompositions(8)] == [(8, 1)]
    assert [(d.first, d.length) for d in decompositions(21)] == [
        (21, 1),
        (10, 2),
        (6, 3),
        (1, 6),
    ]


@given(st.integers(1, 3000))
def test_decompositions_match_naive_enumeration(n):
    assert [(d.first, d.length) for d in decompositions(n)] == naive_decompositions(n)


@given(st.integers(1, 100000))
def test_one_run_per_odd_divisor(n):
    decs = decompositions(n)
    assert len(decs) == len(odd_divisors(n))
    lengths = [d.length for d in decs]
    assert len(set(lengths)) == len(lengths)
    assert sorted(d.odd_factor for d in decs) == odd_divisors(n)
    for d in decs:
        assert d.first >= 1
        assert sum(d.terms()) == n


def test_decomposition_validates_sum():
    with pytest.raises(ValueError):
        Decomposition(first=3, length=2, target=10)
    d = Decomposition(first=3, length=2, target=7)
    assert d.last == 4 and d.parity == "even"


def test_length_spectrum_examples():
    assert length_spectrum(45).elements == (1, 2, 3, 5, 6, 9)
    assert length_spectrum(90).elements == (1, 3, 4, 5, 9, 12)
    assert length_spectrum(1).elements == (1,)


def test_bruteforce_examples():
    assert length_spectrum_bruteforce(9).elements == (1, 2, 3)
    assert length_spectrum_bruteforce(15).elements == (1, 2, 3, 5)
    for j in range(12):
        assert length_spectrum_bruteforce(2**j).elements == (1,)


@given(st.integers(1, 100000))
def test_spectrum_matches_bruteforce_oracle(n):
    assert length_spectrum(n) == length_spectrum_bruteforce(n)


@given(st.integers(1, 100000))
def test_even_elements_never_outnumber_odd(n):
    sp = length_spectrum(n)
    assert len(sp.evens) <= len(sp.odds)


@given(st.integers(1, 100000))
def test_spectrum_structure(n):
    sp = length_spectrum(n)
    assert structure_violations(sp) == []
    assert 1 in sp
    if sp.evens:
        assert v2_from_spectrum(sp) == v2(n)
        step = 2 << v2(n)
        assert sp.evens == tuple(step * k for k in sp.odds[: len(sp.evens)])
    else:
        assert v2_from_spectrum(sp) is None


@given(st.integers(1, 100000))
def test_trivial_spectrum_iff_power_of_two(n):
    assert (length_spectrum(n).elements == (1,)) == (n & (n - 1) == 0)


def test_shape_examples():
    assert shape_of(length_spectrum(1)) is Shape.UNMIXED
    assert shape_of(length_spectrum(3)) is Shape.BALANCED
    assert shape_of(length_spectrum(9)) is Shape.LOPSIDED
    assert shape_of_number(75) is Shape.BALANCED
    assert shape_of_number(9) is Shape.LOPSIDED
    assert shape_of_number(12) is Shape.UNMIXED


def test_smallest_witnesses_of_each_shape():
    firsts = {}
    for n in range(1, 20):
        firsts.setdefault(shape_of_number(n), n)
    assert firsts[Shape.UNMIXED] == 1
    assert firsts[Shape.BALANCED] == 3
    assert firsts[Shape.LOPSIDED] == 9


@given(st.integers(1, 100000))
def test_shape_by_factorization_agrees(n):
    assert shape_of(length_spectrum(n)) is shape_of_number(n)


def test_v2_recovery():
    assert v2_from_spectrum(Spectrum.of([1, 3, 4, 5, 9, 12])) == 1
    assert v2_from_spectrum(Spectrum.of([1, 2])) == 0
    assert v2_from_spectrum(Spectrum.of([1])) is None
    with pytest.raises(ValueError):
        v2_from_spectrum(Spectrum.of([1, 2, 4]))


def test_structure_violations_flag_junk():
    assert structure_violations(Spectrum.of([2, 3]))  # missing 1
    assert structure_violations(Spectrum.of([1, 2, 4]))  # valuations differ
    assert structure_violations(Spectrum.of([1, 2, 4, 6, 9]))  # even majority
    assert structure_violations(Spectrum.of([1, 9, 2, 18]))  # odd part not closed
    assert structure_violations(Spectrum.of([1, 5, 10]))  # wrong even part
    assert structure_violations(Spectrum.of([1, 2, 3, 6])) == []


def test_spectrum_canonicalization():
    sp = Spectrum.of([6, 1, 3, 2, 3])
    assert sp.elements == (1, 2, 3, 6)
    assert sp.odds == (1, 3) and sp.evens == (2, 6)
    assert sp.m0 == 6 and sp.m1 == 3
    with pytest.raises(ValueError):
        Spectrum.of([0, 1])
