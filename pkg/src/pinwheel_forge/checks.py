"""The reproducible check suite behind ``report paper``.

Every check returns a :class:`CheckResult`; the suite runs them in a
fixed order and is deterministic (fixed seeds, no timestamps).
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .catalog import CATALOG, catalog_lookup
from .fpgroups import build_family_presentation, verify_trivial
from .laurent import LaurentPoly, parse_laurent
from .pinwheel import (
    SurgeryInvariants,
    apply_standard_surgeries,
    cyclic_cf_all_zero,
    handle_trade,
    monodromy_check,
    push_through,
    theta,
    validate_pinwheel,
)
from .swkit import (
    AdjConstraint,
    OddLattice,
    canonical_genus_feasibility,
    class_from_standard,
    distinguishing_invariant,
    enumerate_basic_classes,
    minimality_check,
    mms_family,
    parse_class,
    standard_constraints,
)
from .torus_actions import barycentric_pinwheel, classify_action, parse_orbit_data, random_orbit_data, sphere_geometry
from .zlin import MatZ2, mat2_product

SCHEMA_ID = "pinwheel-forge/1"
STATUSES = ("pass", "fail", "inconclusive", "incomplete")


@dataclass
class CheckResult:
    check_id: str
    inputs: dict[str, Any]
    status: str
    witness: Any = None
    summary: str = field(default="", compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict[str, Any]:
        return {"check_id": self.check_id, "inputs": self.inputs, "status": self.status, "witness": self.witness}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _rows(m: MatZ2) -> list[list[int]]:
    return [list(r) for r in m.rows()]


# ---------------------------------------------------------------------------
# monodromy and continued fractions

def check_monodromy_identities() -> list[CheckResult]:
    out = []
    for check_id, a, count in (("monodromy.three_fold", -1, 3), ("monodromy.four_fold", 0, 4)):
        product = mat2_product([theta(a)] * count)
        ok = product == MatZ2.identity()
        out.append(CheckResult(check_id, {"a": a, "copies": count}, _status(ok), _rows(product),
                               f"theta({a})^{count} = {product}"))
    verdict = monodromy_check([-2, -1, -2, -1])
    out.append(CheckResult("monodromy.alternating", {"a": [-2, -1, -2, -1]}, _status(verdict.kind == "MinusId"),
                           verdict.kind, f"(-2,-1,-2,-1) -> {verdict}"))
    return out


def four_fold_closed_form(a1: int, a2: int, a3: int, a4: int) -> MatZ2:
    """Closed form of the four-fold theta product, in the swapped basis order."""
    return MatZ2(
        1 - a2 * a3,
        a1 + a3 - a1 * a2 * a3,
        -a2 - a4 + a2 * a3 * a4,
        1 - a1 * a2 - a1 * a4 - a3 * a4 + a1 * a2 * a3 * a4,
    )


SWAP = MatZ2(0, 1, 1, 0)


def check_four_term_sweep(bound: int = 6) -> CheckResult:
    rng = range(-bound, bound + 1)
    zero_count = 0
    bad_implication, bad_closed_form = [], []
    for seq in itertools.product(rng, repeat=4):
        product = mat2_product([theta(a) for a in seq])
        if SWAP @ product @ SWAP != four_fold_closed_form(*seq):
            bad_closed_form.append(list(seq))
        if cyclic_cf_all_zero(seq):
            zero_count += 1
            if product not in (MatZ2.identity(), -MatZ2.identity()):
                bad_implication.append(list(seq))
    ok = not bad_implication and not bad_closed_form
    witness = {
        "sequences": len(rng) ** 4,
        "all_zero_sequences": zero_count,
        "implication_failures": bad_implication[:5],
        "closed_form_failures": bad_closed_form[:5],
    }
    return CheckResult("cyclic_cf.four_term_sweep", {"bound": bound}, _status(ok), witness,
                       f"{zero_count} of {len(rng) ** 4} sequences have all cyclic fractions 0; all give +-Id")


# ---------------------------------------------------------------------------
# torus actions

EXAMPLE_ORBIT = "(1,-1);(0,1);(1,-1);(2,-1)"


def check_orbit_example() -> CheckResult:
    d = parse_orbit_data(EXAMPLE_ORBIT)
    config = sphere_geometry(d)
    cls = classify_action(d)
    ok = config.self_ints == (-2, 0, 2, 0) and config.b2 == 2 and cls.s2xs2_count == 1 and cls.kind == "sum" \
        and cls.cp2_count == cls.cp2bar_count == 0
    witness = {"self_ints": list(config.self_ints), "b2": config.b2, "classification": str(cls)}
    return CheckResult("orbit.example", {"data": EXAMPLE_ORBIT}, _status(ok), witness,
                       f"self-ints {config.self_ints}, b2 = {config.b2}, {cls}")


def check_barycentric_random(samples: int = 1000, seed: int = 20240917, max_k: int = 6) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    kinds = {"PlusId": 0, "MinusId": 0}
    for _ in range(samples):
        d = random_orbit_data(rng, rng.randint(3, max_k))
        try:
            p = barycentric_pinwheel(d)
        except ValueError as exc:
            failures.append({"data": str(d), "error": str(exc)})
            continue
        report = validate_pinwheel(p)
        if not report.ok:
            failures.append({"data": str(d), "error": str(report)})
            continue
        kinds[monodromy_check(p.gluing_parameters()).kind] += 1
    witness = {"samples": samples, "monodromy": kinds, "failures": failures[:5]}
    return CheckResult("orbit.barycentric_random", {"samples": samples, "seed": seed, "max_k": max_k},
                       _status(not failures), witness, f"{samples} samples, {len(failures)} failures, {kinds}")


# ---------------------------------------------------------------------------
# fundamental groups

def family_members(k: int, n_values, kappa_values):
    for n in n_values:
        for kappa in (kappa_values if k in (2, 4) else [None]):
            yield n, kappa


def check_pi1_family(k: int, n_values=range(1, 6), kappa_values=range(-2, 3), max_cosets: int | None = None) -> CheckResult:
    runs, worst = 0, 0
    trouble, statuses = [], set()
    for convention in ("standard", "inverse_first"):
        for n, kappa in family_members(k, n_values, kappa_values):
            verdict = verify_trivial(build_family_presentation(k, n, kappa, convention=convention), max_cosets)
            runs += 1
            if verdict.enumeration is not None:
                worst = max(worst, verdict.enumeration.cosets_used)
            if verdict.status != "Trivial":
                statuses.add(verdict.status)
                trouble.append({"n": n, "kappa": kappa, "convention": convention, "verdict": str(verdict)})
    if not trouble:
        status = "pass"
    elif statuses == {"Inconclusive"}:
        status = "inconclusive"
    else:
        status = "fail"
    inputs = {"k": k, "n": [min(n_values), max(n_values)], "conventions": ["standard", "inverse_first"]}
    if k in (2, 4):
        inputs["kappa"] = [min(kappa_values), max(kappa_values)]
    witness = {"presentations": runs, "final_order": 1 if not trouble else None,
               "max_cosets_allocated": worst, "problems": trouble[:5]}
    return CheckResult(f"pi1.family_k{k}", inputs, status, witness,
                       f"{runs} presentations, {len(trouble)} not trivial, peak {worst} cosets")


# ---------------------------------------------------------------------------
# Seiberg-Witten bookkeeping

K2_CONSTRAINTS = [
    AdjConstraint((1, -1, 0), 2),
    AdjConstraint((1, 0, -1), 2),
    AdjConstraint((0, 1, 0), 1),
    AdjConstraint((1, 0, 0), 3),
]


def basic_class_case(case: str) -> tuple[OddLattice, list[AdjConstraint], int]:
    if case == "k3":
        return OddLattice(4), standard_constraints(4), 6
    if case == "k2":
        return OddLattice(3), list(K2_CONSTRAINTS), 7
    raise ValueError(f"unknown case {case!r}; expected k2 or k3")


def check_basic_classes(case: str) -> CheckResult:
    lat, constraints, c_square = basic_class_case(case)
    found = enumerate_basic_classes(lat, constraints, c_square)
    expected_text = "3h - e1 - e2 - e3" if case == "k3" else "3h - e1 - e2"
    kappa = class_from_standard(parse_class(expected_text, lat.rank))
    ok = found == sorted([kappa, -kappa], key=lambda k: k.coeffs) and all(k.square() == c_square for k in found)
    witness = {"classes": [str(k) for k in found], "square": c_square}
    return CheckResult(f"sw.basic_classes_{case}", {"rank": lat.rank, "c_square": c_square},
                       _status(ok), witness, ", ".join(map(str, found)) or "none")


def check_minimality() -> list[CheckResult]:
    lat, constraints, c_square = basic_class_case("k3")
    report = minimality_check(enumerate_basic_classes(lat, constraints, c_square))
    ok = report.minimal and report.difference_squares == (24,)
    first = CheckResult("sw.minimal_k3", {"classes": "+-(3h - e1 - e2 - e3)"}, _status(ok),
                        {"status": report.status, "difference_squares": list(report.difference_squares)},
                        f"{report.status}, difference square {report.difference_squares}")
    plus = class_from_standard(parse_class("3h - e1 - e2 - e3 + e4"))
    minus = class_from_standard(parse_class("3h - e1 - e2 - e3 - e4"))
    report = minimality_check([plus, minus])
    ok = not report.minimal and -4 in report.difference_squares
    second = CheckResult("sw.blowup_pair", {"classes": [str(plus), str(minus)]}, _status(ok),
                         {"status": report.status,
                          "witness": [str(k) for k in report.witness] if report.witness else None},
                         f"{report.status} via difference of square -4")
    return [first, second]


def check_sw_family(n_max: int = 100) -> CheckResult:
    f0 = parse_laurent("t^-1 - t")
    values = []
    ok = True
    for n in range(1, n_max + 1):
        f = mms_family(LaurentPoly(), f0, n)
        ok &= f == f0.scale(n)
        values.append(distinguishing_invariant(f))
    ok &= values == list(range(1, n_max + 1)) and len(set(values)) == n_max
    return CheckResult("sw.family", {"f_infty": "0", "f_zero": str(f0), "n": [1, n_max]}, _status(ok),
                       {"distinct_values": len(set(values)), "first": values[:3], "last": values[-1]},
                       f"n(t^-1 - t) for n = 1..{n_max}: {len(set(values))} distinct invariants")


def check_genus_feasibility() -> CheckResult:
    expected = {}
    for k in range(2, 9):
        s = catalog_lookup(f"cp2_k{k}").surgered_pairs
        expected[k] = (s if s is not None else 1, k != 8)
    rows = []
    ok = True
    for k, (s, want) in expected.items():
        rep = canonical_genus_feasibility(k, s)
        ok &= rep.feasible == want
        rows.append({"k": k, "surgered": s, "required": rep.required_genus,
                     "lower_bound": rep.lower_bound, "feasible": rep.feasible})
    return CheckResult("genus.feasibility", {"k": [2, 8]}, _status(ok), rows,
                       "feasible for k = 2..7, infeasible for k = 8" if ok else "mismatch")


# ---------------------------------------------------------------------------
# surgery bookkeeping and catalog

def check_q3_bookkeeping() -> CheckResult:
    out = apply_standard_surgeries(SurgeryInvariants.from_betti(0, 1, 3), 3)
    ok = (out.b1, out.b_plus, out.b_minus) == (6, 7, 9)
    return CheckResult("surgery.q3", {"b": [0, 1, 3], "bing_pairs": 3}, _status(ok),
                       {"b1": out.b1, "b_plus": out.b_plus, "b_minus": out.b_minus},
                       f"(b1, b+, b-) = ({out.b1}, {out.b_plus}, {out.b_minus})")


def check_surgery_invariance() -> CheckResult:
    rows, ok = [], True
    for k in range(0, 10):
        base = SurgeryInvariants.from_betti(0, 1, k)
        for pairs in range(0, 5):
            out = apply_standard_surgeries(base, pairs)
            ok &= out.euler == base.euler and out.signature == base.signature
    for name, p in CATALOG.items():
        if not name.startswith("q"):
            continue
        base_k = p.target.b_minus - p.target.b1
        base = SurgeryInvariants.from_betti(0, 1, base_k)
        same = p.target.euler == base.euler and p.target.signature == base.signature
        if p.components:
            same &= p.euler_sum() == base.euler
        ok &= same
        rows.append({"model": name, "b1": p.target.b1, "b_plus": p.target.b_plus,
                     "b_minus": p.target.b_minus, "euler": p.target.euler})
    return CheckResult("surgery.invariance", {"base_k": [0, 9], "bing_pairs": [0, 4]}, _status(ok), rows,
                       "Euler number and signature fixed by every surgery")


def _expected_euler(name: str) -> int:
    if name == "s2xs2":
        return 4
    if name == "cp2":
        return 3
    return 3 + int(name.split("_k")[1])


def _to_tori(p):
    """Drive a catalog pinwheel to all-torus interfaces."""
    for i, c in enumerate(p.components):
        if c.push_through_eligible:
            p = push_through(p, i)
    remaining = [j for j, c in enumerate(p.components) if c.t.genus == 0]
    return handle_trade(p, remaining) if remaining else p


def check_catalog_entry(name: str) -> CheckResult:
    p = catalog_lookup(name)
    if p.incomplete:
        return CheckResult(f"catalog.{name}", {"name": name}, "incomplete",
                           {"target_euler": p.target.euler, "notes": list(p.notes)},
                           "component data only partially available")
    report = validate_pinwheel(p)
    expected = _expected_euler(name)
    ok = report.ok and p.euler_sum() == expected == p.target.euler
    traded = _to_tori(p)
    trade_ok = all(c.s.genus == c.t.genus == 1 for c in traded.components) \
        and traded.euler_sum() == p.euler_sum() and validate_pinwheel(traded).ok
    witness = {
        "certification": p.certification.kind,
        "euler_sum": p.euler_sum(),
        "expected_euler": expected,
        "monodromy": str(monodromy_check(p.gluing_parameters())) if p.certification.kind == "matrix" else None,
        "tori_after_trading": trade_ok,
    }
    return CheckResult(f"catalog.{name}", {"name": name}, _status(ok and trade_ok), witness,
                       f"euler {p.euler_sum()} (expected {expected}), {p.certification.kind}")


CATALOG_CHECKED = ["cp2", "cp2_k1", "s2xs2"] + [f"cp2_k{k}" for k in range(2, 10)]


def all_checks(max_cosets: int | None = None) -> list[Callable[[], CheckResult | list[CheckResult]]]:
    checks: list[Callable[[], Any]] = [
        check_monodromy_identities,
        check_four_term_sweep,
        check_orbit_example,
        check_barycentric_random,
    ]
    checks += [lambda k=k: check_pi1_family(k, max_cosets=max_cosets) for k in (2, 3, 4, 7)]
    checks += [
        lambda: check_basic_classes("k3"),
        lambda: check_basic_classes("k2"),
        check_minimality,
        check_q3_bookkeeping,
        check_surgery_invariance,
        check_sw_family,
        check_genus_feasibility,
    ]
    checks += [lambda name=name: check_catalog_entry(name) for name in CATALOG_CHECKED]
    return checks


def run_full_report(max_cosets: int | None = None) -> list[CheckResult]:
    results: list[CheckResult] = []
    for check in all_checks(max_cosets):
        out = check()
        results.extend(out if isinstance(out, list) else [out])
    return results


def report_document(results: list[CheckResult]) -> dict[str, Any]:
    return {"schema": SCHEMA_ID, "results": [r.to_json() for r in results]}


def report_json(results: list[CheckResult]) -> str:
    return json.dumps(report_document(results), indent=2) + "\n"


def suite_passed(results: list[CheckResult]) -> bool:
    return all(r.status in ("pass", "incomplete") for r in results)


REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "title": "pinwheel-forge check report",
    "type": "object",
    "required": ["schema", "results"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check_id", "inputs", "status", "witness"],
                "additionalProperties": False,
                "properties": {
                    "check_id": {"type": "string", "minLength": 1},
                    "inputs": {"type": "object"},
                    "status": {"enum": list(STATUSES)},
                    "witness": {},
                },
            },
        },
    },
}


def report_schema() -> str:
    return json.dumps(REPORT_SCHEMA, indent=2) + "\n"
