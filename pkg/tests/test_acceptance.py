"""Acceptance criteria, one test per criterion.

Each test prints a single CRITERION line (visible with pytest -s) and hard
asserts.  Tolerances are exact; time budgets are the stated targets.
"""

import random
import re
import time

from runsum.classes import (
    FiniteClass,
    PowerOfTwoFamily,
    PrimeScaledFamily,
    class_contains,
    class_enumerate,
    exceptional_set,
    spectral_class,
)
from runsum.cli import main
from runsum.inverse import numbers_with_spectrum
from runsum.scan import ScanConfig, find_spectrum_matches, run_scan
from runsum.spectrum import length_spectrum, length_spectrum_bruteforce

TABLE_ROW = re.compile(r"^(\d+)\s{2,}(\(.+?\))\s{2,}(\d+)\s{2,}(odd|even)\s*$")


def _report(cid, ok, detail):
    print(f"CRITERION {cid}: {'PASS' if ok else 'FAIL'} -- {detail}")
    assert ok, f"criterion {cid}: {detail}"


def test_criterion_1_published_table_for_45(capsys):
    started = time.perf_counter()
    code = main(["spectrum", "45"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - started
    rows = [
        (int(m.group(1)), m.group(2), int(m.group(3)), m.group(4))
        for line in out.splitlines()
        if (m := TABLE_ROW.match(line))
    ]
    expected = [
        (1, "(45)", 1, "odd"),
        (45, "(22, 23)", 2, "even"),
        (3, "(14, 15, 16)", 3, "odd"),
        (5, "(7, 8, 9, 10, 11)", 5, "odd"),
        (15, "(5, 6, 7, 8, 9, 10)", 6, "even"),
        (9, "(1, 2, 3, 4, 5, 6, 7, 8, 9)", 9, "odd"),
    ]
    ok = (
        code == 0
        and rows == expected
        and "spectrum = {1, 2, 3, 5, 6, 9}" in out
        and elapsed < 1.0
    )
    with capsys.disabled():
        _report(1, ok, f"spectrum 45 table exact in {elapsed:.3f}s")


def test_criterion_2_oracle_equivalence_to_1e5():
    started = time.perf_counter()
    mismatches = [
        n
        for n in range(1, 100001)
        if length_spectrum(n) != length_spectrum_bruteforce(n)
    ]
    elapsed = time.perf_counter() - started
    ok = not mismatches and elapsed < 30.0
    _report(2, ok, f"0 of 100000 mismatched in {elapsed:.1f}s (single-threaded)")


def test_criterion_3_class_examples_exact():
    checks = [
        spectral_class(1) == PowerOfTwoFamily(1, 0),
        class_enumerate(spectral_class(1), 10)
        == [1, 2, 4, 8, 16, 32, 64, 128, 256, 512],
        class_enumerate(spectral_class(3), 5) == [3, 5, 7, 11, 13],
        spectral_class(9) == FiniteClass((9,)),
        spectral_class(21) == PrimeScaledFamily(3, 6, (27,)),
        class_enumerate(spectral_class(21), 4) == [21, 27, 33, 39],
        not class_contains(spectral_class(21), 63),
        spectral_class(75) == FiniteClass((75,)),
        spectral_class(175) == FiniteClass((175, 245)),
    ]
    _report(3, all(checks), f"{sum(checks)}/{len(checks)} class facts exact")


def test_criterion_4_exceptional_sets_exact():
    facts = {
        21: (9,),
        175: (25, 35),
        3: (),
        36125: (289, 425),
        21434375: (6859, 9025),
    }
    got = {n: exceptional_set(length_spectrum(n)) for n in facts}
    _report(4, got == facts, f"exceptional sets {got}")


def test_criterion_5_witness_scans():
    started = time.perf_counter()
    wanted = {
        "nonempty-E": 21,
        "excessive": 75,
        "E-size-2": 175,
        "all-primes-divide-m": 2673,
        "all-odd-primes-excessive": 9261,
        "beta-gt-1": 36125,
    }
    reports = run_scan(ScanConfig(1, 50000, witness=tuple(wanted)))
    found = {}
    for r in reports:
        found.update(r.witnesses)
    elapsed = time.perf_counter() - started
    ok = found == wanted and elapsed < 120.0
    _report(5, ok, f"witnesses {found} in {elapsed:.1f}s")


def test_criterion_6_structural_theorem_scans():
    started = time.perf_counter()
    all_suites = (
        "oracle-equivalence",
        "theorem-4",
        "E-size",
        "prop-22",
        "trichotomy",
        "round-trip",
    )
    small = run_scan(ScanConfig(1, 100000, verify=all_suites))
    big = run_scan(
        ScanConfig(1, 1000000, verify=("E-size", "prop-22", "trichotomy"))
    )
    elapsed = time.perf_counter() - started
    bad = {
        r.property_name: r.counterexamples
        for r in small + big
        if r.counterexamples
    }
    ok = not bad and elapsed < 300.0
    _report(
        6,
        ok,
        f"all suites to 1e5 + balanced structure to 1e6 in {elapsed:.0f}s, "
        f"counterexamples: {bad or 'none'}",
    )


def test_criterion_7_round_trip_to_2e4():
    started = time.perf_counter()
    bad = []
    for n in range(1, 20001):
        klass = spectral_class(n)
        if numbers_with_spectrum(length_spectrum(n).elements) != klass:
            bad.append(n)
    elapsed = time.perf_counter() - started
    _report(7, not bad, f"0 of 20000 round-trip mismatches in {elapsed:.0f}s")


def test_criterion_8_soundness_and_completeness():
    started = time.perf_counter()
    rng = random.Random(8)
    pairs = []
    sound = True
    for n in range(1, 10001):
        sp = length_spectrum(n)
        klass = spectral_class(n)
        for x in class_enumerate(klass, 25):
            if x > 10**7:
                break
            if length_spectrum(x) != sp:
                sound = False
            pairs.append(x)
    sample = rng.sample(pairs, len(pairs) // 100)
    oracle_ok = all(
        length_spectrum_bruteforce(x) == length_spectrum(x) for x in sample
    )

    by_spectrum = {}
    for x in range(1, 10001):
        by_spectrum.setdefault(length_spectrum(x).elements, []).append(x)
    complete = True
    for members in by_spectrum.values():
        klass = spectral_class(members[0])
        for x in members:
            if spectral_class(x) != klass or not class_contains(klass, x):
                complete = False
    elapsed = time.perf_counter() - started
    ok = sound and oracle_ok and complete
    _report(
        8,
        ok,
        f"{len(pairs)} members sound ({len(sample)} oracle-sampled), "
        f"{len(by_spectrum)} spectrum groups complete, {elapsed:.0f}s",
    )


def test_criterion_9_negative_inverse(capsys):
    code_a = main(["inverse", "1", "2", "4"])
    out_a = capsys.readouterr().out
    code_b = main(["inverse", "2", "3"])
    out_b = capsys.readouterr().out
    cli_ok = (
        code_a == 3
        and code_b == 3
        and "not a spectrum" in out_a
        and "not a spectrum" in out_b
    )
    matches = find_spectrum_matches([(1, 2, 4), (2, 3)], 10**6)
    scan_ok = all(not ns for ns in matches.values())
    with capsys.disabled():
        _report(
            9,
            cli_ok and scan_ok,
            f"exit 3 twice; preimages up to 1e6: "
            f"{ {k: len(v) for k, v in matches.items()} }",
        )
