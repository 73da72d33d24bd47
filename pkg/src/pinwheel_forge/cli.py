"""Command-line front end.

Exit status is 0 when every check passes (incomplete entries are
tolerated), 1 when a check fails or is inconclusive, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import checks
from .catalog import catalog_lookup, catalog_names, pinwheel_to_json
from .fpgroups import (
    PresentationSyntaxError,
    build_family_presentation,
    default_max_cosets,
    parse_presentation,
    verify_trivial,
)
from .fpgroups.families import SUPPORTED_FAMILIES
from .laurent import parse_laurent
from .pinwheel import cyclic_cf_all_zero, cyclic_continued_fractions, monodromy_check, validate_pinwheel
from .swkit import distinguishing_invariant, enumerate_basic_classes, minimality_check, mms_family
from .torus_actions import OrbitDataError, barycentric_pinwheel, classify_action, parse_orbit_data, sphere_geometry

# options whose values may begin with "-"
_SIGNED_OPTIONS = ("--a", "--n", "--kappa", "--f0", "--finf")


class InputError(ValueError):
    """Malformed user input; reported with exit status 2."""


def _attach_signed_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _SIGNED_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected a..b or an integer") from None
    if hi_i < lo_i:
        raise InputError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad integer list {text!r}") from None


def _emit(result: checks.CheckResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps(result.to_json(), indent=2))
    else:
        print(f"{result.status.upper():12} {result.check_id}: {result.summary}")


def _exit_for(results: Sequence[checks.CheckResult]) -> int:
    return 0 if checks.suite_passed(results) else 1


# ---------------------------------------------------------------------------
# subcommands

def cmd_pinwheel_check(args) -> int:
    if args.a is not None:
        seq = _int_list(args.a)
        if not seq:
            raise InputError("--a needs at least one integer")
        verdict = monodromy_check(seq)
        witness = {"product": [list(r) for r in verdict.product.rows()], "verdict": verdict.kind}
        summary = f"a={seq}: {verdict}"
        if len(seq) >= 3:
            fracs = [str(v) for v in cyclic_continued_fractions(seq)]
            witness["cyclic_continued_fractions"] = fracs
            summary += f"; cyclic fractions {fracs} (all zero: {cyclic_cf_all_zero(seq)})"
        result = checks.CheckResult("pinwheel.monodromy", {"a": seq}, "pass" if verdict.certifies else "fail",
                                    witness, summary)
        _emit(result, args.json)
        return _exit_for([result])
    if args.name is None:
        raise InputError("give a catalog name or --a")
    if args.name not in catalog_names():
        raise InputError(f"unknown catalog entry {args.name!r}; known: {', '.join(catalog_names())}")
    p = catalog_lookup(args.name)
    report = validate_pinwheel(p)
    status = "incomplete" if p.incomplete else ("pass" if report.ok else "fail")
    result = checks.CheckResult(f"pinwheel.{p.name}", {"name": p.name}, status,
                                {"entry": pinwheel_to_json(p), "items": [
                                    {"name": i.name, "ok": i.ok, "detail": i.detail} for i in report.items]},
                                f"{len(p.components)} components, certification "
                                f"{p.certification.kind if p.certification else 'none'}")
    if args.json:
        _emit(result, True)
    else:
        _emit(result, False)
        print(report)
    return _exit_for([result])


def _orbit(args):
    try:
        return parse_orbit_data(args.data)
    except OrbitDataError as exc:
        raise InputError(str(exc)) from None


def cmd_orbit_classify(args) -> int:
    d = _orbit(args)
    try:
        config = sphere_geometry(d)
        cls = classify_action(d)
    except OrbitDataError as exc:
        raise InputError(str(exc)) from None
    witness = {"self_ints": list(config.self_ints), "adjacents": list(config.adjacents),
               "b2": config.b2, "classification": str(cls)}
    result = checks.CheckResult("orbit.classify", {"data": str(d)}, "pass", witness, str(cls))
    if args.json:
        _emit(result, True)
    else:
        print(f"self-intersections: {list(config.self_ints)}")
        print(f"b2 = {config.b2}")
        print(cls)
    return 0


def cmd_orbit_pinwheel(args) -> int:
    d = _orbit(args)
    try:
        p = barycentric_pinwheel(d)
    except OrbitDataError as exc:
        raise InputError(str(exc)) from None
    report = validate_pinwheel(p)
    result = checks.CheckResult("orbit.pinwheel", {"data": str(d)}, "pass" if report.ok else "fail",
                                pinwheel_to_json(p), f"{p.k} components, {monodromy_check(p.gluing_parameters())}")
    if args.json:
        _emit(result, True)
    else:
        for c in p.components:
            print(f"{c.name:20} S={c.s.self_int:>3}  T={c.t.self_int:>3}  euler={c.euler}")
        print(report)
    return _exit_for([result])


def _presentation_from_args(args):
    try:
        if args.presentation is not None:
            return parse_presentation(args.presentation, args.convention)
        text = Path(args.file).read_text(encoding="utf-8")
        return parse_presentation(text, args.convention)
    except PresentationSyntaxError as exc:
        raise InputError(f"presentation: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None


def cmd_pi1_verify(args) -> int:
    limit = args.max_cosets if args.max_cosets is not None else default_max_cosets()
    results = []
    if args.presentation is not None or args.file is not None:
        p = _presentation_from_args(args)
        verdict = verify_trivial(p, limit)
        status = {"Trivial": "pass", "Inconclusive": "inconclusive"}.get(verdict.status, "fail")
        results.append(checks.CheckResult("pi1.presentation", {"generators": list(p.generators)}, status,
                                          str(verdict), str(verdict)))
    else:
        if args.family is None:
            raise InputError("give --family, --presentation or --file")
        if args.family not in SUPPORTED_FAMILIES:
            raise InputError(f"--family must be one of {SUPPORTED_FAMILIES}")
        n_values = parse_range(args.n)
        if n_values.start < 1:
            raise InputError("--n values must be at least 1")
        kappas = parse_range(args.kappa)
        for n in n_values:
            for kappa in (kappas if args.family in (2, 4) else [None]):
                p = build_family_presentation(args.family, n, kappa, convention=args.convention)
                verdict = verify_trivial(p, limit)
                status = {"Trivial": "pass", "Inconclusive": "inconclusive"}.get(verdict.status, "fail")
                inputs = {"k": args.family, "n": n}
                if kappa is not None:
                    inputs["kappa"] = kappa
                cosets = verdict.enumeration.cosets_used if verdict.enumeration else None
                label = ", ".join(f"{k}={v}" for k, v in inputs.items())
                results.append(checks.CheckResult("pi1.family", inputs, status,
                                                  {"verdict": str(verdict), "cosets_allocated": cosets},
                                                  f"{label}: {verdict}"))
    for r in results:
        _emit(r, args.json)
    return _exit_for(results)


def cmd_sw_basic_classes(args) -> int:
    lat, constraints, c_square = checks.basic_class_case(args.case)
    found = enumerate_basic_classes(lat, constraints, c_square, bound=args.bound)
    mini = minimality_check(found) if found else None
    witness = {"classes": [str(k) for k in found], "c_square": c_square}
    if mini is not None:
        witness["minimality"] = mini.status
        witness["difference_squares"] = list(mini.difference_squares)
    result = checks.CheckResult(f"sw.basic_classes_{args.case}", {"case": args.case, "bound": args.bound},
                                "pass" if found else "fail", witness,
                                ", ".join(map(str, found)) + (f"; {mini.status}" if mini else ""))
    _emit(result, args.json)
    return _exit_for([result])


def cmd_sw_family(args) -> int:
    try:
        f0, finf = parse_laurent(args.f0), parse_laurent(args.finf)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = []
    for n in parse_range(args.n):
        f = mms_family(finf, f0, n)
        rows.append({"n": n, "sw": str(f), "invariant": distinguishing_invariant(f)})
    if args.json:
        print(json.dumps({"f_zero": str(f0), "f_infty": str(finf), "family": rows}, indent=2))
    else:
        for row in rows:
            print(f"n={row['n']:>4}  SW = {row['sw']:<30} max|coeff| = {row['invariant']}")
    return 0


def cmd_report_full(args) -> int:
    results = checks.run_full_report(args.max_cosets)
    for r in results:
        _emit(r, False)
    incomplete = [r.check_id for r in results if r.status == "incomplete"]
    failed = [r.check_id for r in results if r.status in ("fail", "inconclusive")]
    passed = sum(r.status == "pass" for r in results)
    print()
    print(f"{passed} passed, {len(failed)} failed or inconclusive, {len(incomplete)} incomplete")
    if incomplete:
        print("incomplete (drawn-only data): " + ", ".join(incomplete))
    if failed:
        print("FAILED: " + ", ".join(failed))
    if args.json:
        Path(args.json).write_text(checks.report_json(results), encoding="utf-8")
    return _exit_for(results)


def cmd_report_schema(args) -> int:
    sys.stdout.write(checks.report_schema())
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinwheel-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pw = sub.add_parser("pinwheel", help="pinwheel catalog and monodromy").add_subparsers(dest="action", required=True)
    check = pw.add_parser("check", help="validate a catalog entry or a gluing sequence")
    check.add_argument("name", nargs="?", help="catalog entry name")
    check.add_argument("--a", help="comma-separated gluing parameters, e.g. -1,-1,-1")
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=cmd_pinwheel_check)

    orbit = sub.add_parser("orbit", help="torus-action orbit data").add_subparsers(dest="action", required=True)
    for name, func, text in (("classify", cmd_orbit_classify, "classify the manifold"),
                             ("pinwheel", cmd_orbit_pinwheel, "barycentric pinwheel")):
        cmd = orbit.add_parser(name, help=text)
        cmd.add_argument("--data", required=True, help='pairs like "(1,-1);(0,1);(1,-1);(2,-1)"')
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(func=func)

    pi1 = sub.add_parser("pi1", help="fundamental groups").add_subparsers(dest="action", required=True)
    verify = pi1.add_parser("verify", help="prove triviality by coset enumeration")
    verify.add_argument("--family", type=int, help="family k in {2,3,4,7}")
    verify.add_argument("--n", default="1", help="surgery parameter range a..b")
    verify.add_argument("--kappa", default="-2..2", help="xi exponent range for k = 2, 4")
    verify.add_argument("--presentation", help="inline presentation text")
    verify.add_argument("--file", help="presentation file (UTF-8)")
    verify.add_argument("--max-cosets", type=int, default=None)
    verify.add_argument("--convention", choices=("standard", "inverse_first"), default="standard")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_pi1_verify)

    sw = sub.add_parser("sw", help="Seiberg-Witten bookkeeping").add_subparsers(dest="action", required=True)
    bc = sw.add_parser("basic-classes", help="enumerate basic classes")
    bc.add_argument("--case", required=True, choices=("k2", "k3"))
    bc.add_argument("--bound", type=int, default=5)
    bc.add_argument("--json", action="store_true")
    bc.set_defaults(func=cmd_sw_basic_classes)
    fam = sw.add_parser("family", help="f_infty + n f_0 over a range of n")
    fam.add_argument("--f0", required=True)
    fam.add_argument("--finf", required=True)
    fam.add_argument("--n", required=True)
    fam.add_argument("--json", action="store_true")
    fam.set_defaults(func=cmd_sw_family)

    report = sub.add_parser("report", help="full reproduction report").add_subparsers(dest="action", required=True)
    full = report.add_parser("paper", help="run every check")
    full.add_argument("--json", metavar="FILE", help="also write the JSON report here")
    full.add_argument("--max-cosets", type=int, default=None)
    full.set_defaults(func=cmd_report_full)
    schema = report.add_parser("schema", help="print the report JSON schema")
    schema.set_defaults(func=cmd_report_schema)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_signed_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_cosets", None) is not None and args.max_cosets < 1:
        print("error: --max-cosets must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
