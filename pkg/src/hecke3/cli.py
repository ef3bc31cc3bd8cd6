"""Command line surface: construct, verify, classify, analyze, fuzz, table.

Exactly one JSON document goes to standard output; diagnostics go to
standard error.  Exit codes: 0 all checks passed / command succeeded,
1 a verification check failed (witness in the output), 2 invalid input.
The default field is "Q" and can be overridden per invocation with
``--field`` or globally with the HECKE3_FIELD environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import Hecke3Error, InputError
from .fields import parse_field
from .verifier import fuzz, run_suite
from .classify import TYPE_LABELS, canonical, classify
from .cybe import carrier, check_cybe, check_symmetrized, classical_r, fingerprint, is_frobenius
from .heckecore import build_R, deform
from .jsonio import hecke_data_to_json, load_symmetry, symmetry_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path!r}: {exc}") from exc


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _symmetry_from_args(args, field):
    source = getattr(args, "data", None) or getattr(args, "matrix", None)
    if source is None:
        raise InputError("an input document is required (--data or --matrix)")
    return load_symmetry(_read_json(source), field)


def cmd_construct(args, field) -> int:
    if args.data:
        sym = load_symmetry(_read_json(args.data), field)
    else:
        if args.type is None:
            raise InputError("construct needs --type N or --data FILE")
        label = f"Type{args.type}"
        if label not in TYPE_LABELS:
            raise InputError(f"unknown type {args.type}")
        q = field.parse(args.q) if args.q is not None else None
        sym = build_R(canonical(label, q, field))
    _emit(symmetry_to_json(sym))
    return EXIT_OK


def cmd_verify(args, field) -> int:
    sym = _symmetry_from_args(args, field)
    reports = run_suite(sym)
    _emit([r.to_json() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_classify(args, field) -> int:
    sym = _symmetry_from_args(args, field)
    reports = run_suite(sym)
    if not all(r.passed for r in reports):
        _emit({
            "error": {"type": "NotHeckeSym0",
                      "message": "verification failed before classification"},
            "checks": [r.to_json() for r in reports],
        })
        return EXIT_CHECK_FAILED
    _emit(classify(sym).to_json())
    return EXIT_OK


def cmd_rmatrix(args, field) -> int:
    sym = _symmetry_from_args(args, field)
    r = classical_r(sym)
    reports = [check_cybe(r), check_symmetrized(r, sym.q)]
    _emit({
        "r": r.to_json(),
        "checks": [rep.to_json() for rep in reports],
    })
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_CHECK_FAILED


def cmd_carrier(args, field) -> int:
    sym = _symmetry_from_args(args, field)
    r = classical_r(sym)
    sub = carrier(r)
    frob = is_frobenius(sub)
    doc = sub.to_json()
    doc["fingerprint"] = list(fingerprint(sub))
    doc["frobenius"] = frob.to_json(sub.field)
    _emit(doc)
    return EXIT_OK


def cmd_deform(args, field) -> int:
    sym = _symmetry_from_args(args, field)
    lam = sym.field.parse(args.lam)
    moved = deform(sym, lam)
    reports = run_suite(moved)
    _emit({
        "symmetry": symmetry_to_json(moved),
        "checks": [r.to_json() for r in reports],
    })
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_fuzz(args, field) -> int:
    report = fuzz(field, args.trials, args.seed, args.strategy,
                  adversarial=args.adversarial)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_table(args, field) -> int:
    q = field.parse(args.q)
    entries = []
    for label in TYPE_LABELS:
        use_q = q if label in ("Type1", "Type2") else None
        data = canonical(label, use_q, field)
        sym = build_R(data)
        r = classical_r(sym)
        sub = carrier(r)
        entries.append({
            "type": label,
            "q": field.fmt(sym.q),
            "data": hecke_data_to_json(data),
            "R": symmetry_to_json(sym)["R"],
            "r": r.to_json(),
            "carrier": {
                **sub.to_json(),
                "fingerprint": list(fingerprint(sub)),
                "frobenius": is_frobenius(sub).to_json(sub.field),
            },
        })
    _emit({"field": field.name, "types": entries})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default=argparse.SUPPRESS,
        help="field spec 'Q' or 'Fp:<p>' (default: HECKE3_FIELD or 'Q')",
    )
    parser = argparse.ArgumentParser(
        prog="hecke3",
        parents=[common],
        description="Exact Hecke symmetries on a 3-dimensional space: "
                    "construction, verification, classification, classical r-matrices.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="build a symmetry (canonical type or quadruple)")
    p.add_argument("--type", type=int, help="canonical type number 1..8")
    p.add_argument("--q", help="Hecke parameter for types 1 and 2")
    p.add_argument("--data", help="quadruple JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common],
                       help="run every exact check on a symmetry")
    p.add_argument("--data", help="quadruple JSON file")
    p.add_argument("--matrix", help="symmetry record or bare 9x9 matrix JSON file")
    p.set_defaults(func=cmd_verify)

    for verb, func, extra in (
        ("classify", cmd_classify, "determine the type of a symmetry"),
        ("rmatrix", cmd_rmatrix, "classical r-matrix with CYBE and symmetrization checks"),
        ("carrier", cmd_carrier, "carrier subalgebra, Frobenius status, fingerprint"),
    ):
        p = sub.add_parser(verb, parents=[common], help=extra)
        p.add_argument("--matrix", help="symmetry record or bare 9x9 matrix JSON file")
        p.add_argument("--data", help="quadruple JSON file")
        p.set_defaults(func=func)

    p = sub.add_parser("deform", parents=[common],
                       help="deform along the flip line and re-verify")
    p.add_argument("--matrix", help="symmetry record or bare 9x9 matrix JSON file")
    p.add_argument("--data", help="quadruple JSON file")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="deformation parameter (use --lambda=-1/2 for negatives)")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("fuzz", parents=[common], help="deterministic sampling harness")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--strategy", choices=["A", "B"], default="A")
    p.add_argument("--adversarial", action="store_true",
                   help="break the q constraint on purpose; trials must fail")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("table", parents=[common],
                       help="all eight canonical types with R, r and carriers")
    p.add_argument("--q", default="2", help="parameter for the two q-families (default 2)")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = getattr(args, "field", None) or os.environ.get("HECKE3_FIELD") or "Q"
        field = parse_field(spec)
        return args.func(args, field)
    except Hecke3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
