"""Command line front end.

Subcommands: spectrum, class, inverse, verify, witness.  JSON output keeps
every integer as a decimal string so 53-bit consumers never round; exit codes
are 0 success, 2 invalid input (zero, overflow, bad flags), 3 not-a-spectrum,
4 verification found counterexamples (or a witness scan came up empty).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from runsum.arith import NaturalRangeError, ensure_natural
from runsum.classes import (
    FiniteClass,
    PowerOfTwoFamily,
    class_cardinality,
    class_enumerate,
    spectral_class,
)
from runsum.inverse import numbers_with_spectrum
from runsum.scan import (
    EXTENDED_ONLY_WITNESSES,
    ScanConfig,
    VERIFY_CHECKS,
    WITNESS_PREDICATES,
    run_scan,
)
from runsum.spectrum import Spectrum, decompositions, length_spectrum, shape_of

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_A_SPECTRUM = 3
EXIT_COUNTEREXAMPLES = 4

DEFAULT_TERM_CAP = 20
DEFAULT_MEMBER_LIMIT = 10


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def _class_text(klass) -> str:
    if isinstance(klass, FiniteClass):
        return _fmt_set(klass.members)
    if isinstance(klass, PowerOfTwoFamily):
        base = "2^e" if klass.odd_part == 1 else f"2^e * {klass.odd_part}"
        return f"{{{base} : e >= {klass.min_exponent}}}"
    scaled = "p" if klass.scale == 1 else f"{klass.scale} * p"
    family = f"{{{scaled} : p prime, p > {klass.prime_threshold}}}"
    if klass.extras:
        return f"{_fmt_set(klass.extras)} u {family}"
    return family


def _class_json(klass) -> dict:
    if isinstance(klass, FiniteClass):
        return {"kind": "finite", "members": [str(m) for m in klass.members]}
    if isinstance(klass, PowerOfTwoFamily):
        return {
            "kind": "pow2",
            "odd_part": str(klass.odd_part),
            "min_exponent": str(klass.min_exponent),
        }
    return {
        "kind": "prime_scaled",
        "scale": str(klass.scale),
        "prime_threshold": str(klass.prime_threshold),
        "extras": [str(x) for x in klass.extras],
    }


def _cardinality_str(klass) -> str:
    size = class_cardinality(klass)
    return "infinite" if size == math.inf else str(size)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _decomposition_text(dec, cap: int) -> str:
    if dec.length <= cap:
        return "(" + ", ".join(str(t) for t in dec.terms()) + ")"
    return f"({dec.first}..{dec.last})"


def cmd_spectrum(args) -> int:
    n = ensure_natural(args.n, "n")
    decs = decompositions(n)
    sp = length_spectrum(n)
    shape = shape_of(sp)
    rows = [
        (str(d.odd_factor), _decomposition_text(d, args.term_cap), str(d.length), d.parity)
        for d in decs
    ]
    if args.json:
        _emit(
            {
                "n": str(n),
                "spectrum": [str(x) for x in sp.elements],
                "shape": shape.value,
                "decompositions": [
                    {
                        "factor": str(d.odd_factor),
                        "first": str(d.first),
                        "length": str(d.length),
                        "parity": d.parity,
                    }
                    for d in decs
                ],
            }
        )
        return EXIT_OK
    print(f"n = {n}")
    print(f"spectrum = {sp}")
    print(f"shape = {shape.value}")
    header = ("factor", "decomposition", "length", "parity")
    widths = [
        max(len(header[i]), max(len(r[i]) for r in rows)) for i in range(4)
    ]
    print("  ".join(header[i].ljust(widths[i]) for i in range(4)).rstrip())
    for r in rows:
        print("  ".join(r[i].ljust(widths[i]) for i in range(4)).rstrip())
    return EXIT_OK


def _print_class(n, sp, klass, limit: int, as_json: bool) -> None:
    members = class_enumerate(klass, limit)
    if as_json:
        payload = {
            "spectrum": [str(x) for x in sp.elements],
            "class": _class_json(klass),
            "cardinality": _cardinality_str(klass),
            "members": [str(m) for m in members],
        }
        if n is not None:
            payload["n"] = str(n)
            payload["shape"] = shape_of(sp).value
        _emit(payload)
        return
    if n is not None:
        print(f"n = {n}")
    print(f"spectrum = {sp}")
    if n is not None:
        print(f"shape = {shape_of(sp).value}")
    print(f"class = {_class_text(klass)}")
    print(f"cardinality = {_cardinality_str(klass)}")
    print("members = " + ", ".join(str(m) for m in members))


def cmd_class(args) -> int:
    n = ensure_natural(args.n, "n")
    sp = length_spectrum(n)
    klass = spectral_class(n)
    _print_class(n, sp, klass, args.limit, args.json)
    return EXIT_OK


def cmd_inverse(args) -> int:
    for v in args.elements:
        ensure_natural(v, "spectrum element")
    klass = numbers_with_spectrum(args.elements)
    canonical = sorted(set(args.elements))
    if klass is None:
        if args.json:
            _emit(
                {
                    "input": [str(x) for x in canonical],
                    "is_spectrum": False,
                    "class": None,
                }
            )
        else:
            print("not a spectrum")
        return EXIT_NOT_A_SPECTRUM
    members = class_enumerate(klass, args.limit)
    if args.json:
        _emit(
            {
                "input": [str(x) for x in canonical],
                "is_spectrum": True,
                "spectrum": [str(x) for x in canonical],
                "shape": shape_of(Spectrum.of(canonical)).value,
                "class": _class_json(klass),
                "cardinality": _cardinality_str(klass),
                "members": [str(m) for m in members],
            }
        )
    else:
        print(f"spectrum = {_fmt_set(canonical)}")
        print(f"class = {_class_text(klass)}")
        print(f"cardinality = {_cardinality_str(klass)}")
        print("members = " + ", ".join(str(m) for m in members))
    return EXIT_OK


def _report_json(report) -> dict:
    return {
        "lo": str(report.lo),
        "hi": str(report.hi),
        "property": report.property_name,
        "counterexamples": [str(n) for n in report.counterexamples],
        "witnesses": {k: str(v) for k, v in report.witnesses.items()},
        "elapsed_seconds": round(report.elapsed_seconds, 3),
    }


def cmd_verify(args) -> int:
    props = tuple(args.properties) if args.properties else tuple(VERIFY_CHECKS)
    config = ScanConfig(args.lo, args.hi, verify=props, jobs=args.jobs)
    reports = run_scan(config)
    if not args.json:  # summary for humans; the report itself is the JSON
        for r in reports:
            status = "ok" if r.ok else "FAIL"
            extra = "" if r.ok else f" counterexamples: {r.counterexamples}"
            print(
                f"[{status}] {r.property_name} over [{r.lo}, {r.hi}]"
                f" ({r.elapsed_seconds:.2f}s){extra}",
                file=sys.stderr,
            )
    _emit([_report_json(r) for r in reports])
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLES


def cmd_witness(args) -> int:
    if args.property in EXTENDED_ONLY_WITNESSES and not args.extended:
        print(
            f"witness {args.property} scans past 2*10^7; pass --extended to run it",
            file=sys.stderr,
        )
        return EXIT_INVALID
    config = ScanConfig(1, args.max, witness=(args.property,), jobs=args.jobs)
    report = run_scan(config)[0]
    hit = report.witnesses.get(args.property)
    if args.json:
        _emit([_report_json(report)])
    elif hit is None:
        print(f"{args.property}: no witness <= {args.max}")
    else:
        print(f"{args.property}: {hit}")
    return EXIT_OK if hit is not None else EXIT_COUNTEREXAMPLES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="runsum",
        description="Consecutive-run decompositions, length spectra, and spectral classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="runs, spectrum and shape of a number")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--term-cap",
        type=int,
        default=DEFAULT_TERM_CAP,
        help="render runs longer than this as first..last",
    )
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("class", help="spectral class of a number")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_MEMBER_LIMIT)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("inverse", help="numbers with the given set as spectrum")
    p.add_argument("elements", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_MEMBER_LIMIT)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("verify", help="scan a range for counterexamples")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument(
        "properties",
        nargs="*",
        metavar="property",
        help=f"default: all of {', '.join(VERIFY_CHECKS)}",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="smallest number with a named property")
    p.add_argument("property", choices=sorted(WITNESS_PREDICATES))
    p.add_argument("--max", type=int, required=True, help="scan upper bound")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--extended", action="store_true")
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NaturalRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
