"""Static catalog of pinwheel structures and their JSON form.

Component Euler characteristics are stored rather than derived; the only
cross-check is that they add up to the target.  Surface names use ASCII:
``CP2bar`` for the reversed projective plane, ``F_n`` for the ruled surface.
"""
from __future__ import annotations

import json
from typing import Any

from .pinwheel import (
    MATRIX,
    Certification,
    InterfaceSurface,
    Pinwheel,
    PinwheelComponent,
    SurgeryInvariants,
    apply_standard_surgeries,
)


def _comp(name, s_int, t_int, euler, *, genus=0, htc=True, eligible=False, pairs=0):
    return PinwheelComponent(
        name=name,
        s=InterfaceSurface(genus, s_int),
        t=InterfaceSurface(genus, t_int),
        euler=euler,
        htc_at_t=htc,
        push_through_eligible=eligible,
        surgered_bing_pairs=pairs,
    )


def _rational(k: int) -> SurgeryInvariants:
    """Invariants of CP2 # k CP2bar."""
    return SurgeryInvariants.from_betti(0, 1, k)


def _ext(cite: str) -> Certification:
    return Certification("external", cite)


KIRBY = "Kirby-calculus identification of the cyclic sum with {}"


def _build() -> dict[str, Pinwheel]:
    entries: list[Pinwheel] = []
    add = entries.append

    # B_n is F_n minus a fiber (square 0) and the negative section (square -n)
    add(Pinwheel("cp2", tuple(_comp("B1", 0, -1, 1) for _ in range(3)), MATRIX, _rational(0)))
    add(Pinwheel(
        "cp2_k1",
        (_comp("B2", 0, -2, 1), _comp("B1", 0, -1, 1), _comp("B2", 0, -2, 1), _comp("B1", 0, -1, 1)),
        MATRIX, _rational(1),
    ))
    add(Pinwheel(
        "s2xs2", tuple(_comp("B0", 0, 0, 1, pairs=1) for _ in range(4)), MATRIX,
        SurgeryInvariants.from_betti(0, 1, 1), surgered_pairs=4,
    ))
    # I0' is the complement of F-E and 2S-E in S2xS2 # CP2bar
    add(Pinwheel(
        "cp2_k2",
        (_comp("I0'", -1, -1, 2, pairs=1), _comp("B1#CP2bar", 0, -1, 2, pairs=1), _comp("B0", 0, 0, 1, pairs=1)),
        _ext(KIRBY.format("CP2#2CP2bar (handle slides, two blowdowns, one anti-blowdown)")),
        _rational(2), surgered_pairs=3,
    ))
    add(Pinwheel(
        "cp2_k3", tuple(_comp("B1#CP2bar", 0, -1, 2, pairs=1) for _ in range(3)), MATRIX,
        _rational(3), surgered_pairs=3,
    ))
    # K_n is F_n minus S_+ + F (square n+2) and S_- (square -n); a rational ball
    k0 = _comp("K0", 2, 0, 1, htc=False, eligible=True)
    add(Pinwheel(
        "cp2_k4",
        (_comp("I0'", -1, -1, 2, pairs=1), k0, _comp("B3#3CP2bar", -3, 0, 4, pairs=1)),
        _ext(KIRBY.format("CP2#4CP2bar")), _rational(4), surgered_pairs=2,
    ))
    add(Pinwheel(
        "cp2_k5", (), None, _rational(5), incomplete=True,
        notes=("component data is only drawn, never listed",),
    ))
    add(Pinwheel(
        "cp2_k6",
        (
            _comp("I0'", -1, -1, 2, pairs=1),
            k0,
            # F_1 # 5CP2bar minus S_+ + F - E1 - E2 - E3 and S_- - E4 - E5
            _comp("L(0,-3)", 0, -3, 6, htc=False, eligible=True),
        ),
        _ext(KIRBY.format("CP2#6CP2bar")), _rational(6), surgered_pairs=1,
    ))
    add(Pinwheel(
        "cp2_k7",
        (
            _comp("K1", 3, -1, 1, htc=False, eligible=True),
            _comp("K4", 6, -4, 1, htc=False, eligible=True),
            _comp("B7#7CP2bar", -7, 0, 8, pairs=1),
        ),
        _ext(KIRBY.format("CP2#7CP2bar")), _rational(7), surgered_pairs=1,
    ))
    add(Pinwheel(
        "cp2_k8", (), None, _rational(8), incomplete=True,
        notes=(
            "partial: L(-1,-3) is F_1 # 6CP2bar minus S_- (square -1) and S_+ + F - E1 - ... - E6 (square -3), euler 7",
            "partial: W is F_0 # CP2bar minus S (square 0) and 2S + F - 2E (square 0), euler 2",
            "canonical class would need genus 2, below what Bing-pair surgery reaches",
        ),
    ))
    add(Pinwheel(
        "cp2_k9", (), None, _rational(9), surgered_pairs=1, incomplete=True,
        notes=("partial: built from K0 and L(j,k) components; one Bing pair in a fiber neighborhood",),
    ))

    def q_model(name, comps, cert, base_k, pairs, **kw):
        return Pinwheel(name, comps, cert, apply_standard_surgeries(_rational(base_k), pairs),
                        surgered_pairs=pairs, **kw)

    symplectic = _ext("symplectic sum of symplectic pinwheel components (Lagrangian core tori)")
    def t4_blown(s_int, t_int):
        return _comp("T4#CP2bar", s_int, t_int, 2, genus=1, pairs=1)

    add(q_model(
        "q2_model",
        (t4_blown(-1, -1), t4_blown(-1, 0), _comp("T4", 0, 0, 1, genus=1, pairs=1)),
        symplectic, 2, 3,
    ))
    add(q_model("q3_model", tuple(t4_blown(-1, 0) for _ in range(3)), MATRIX, 3, 3))
    add(q_model(
        "q4_model",
        (
            t4_blown(-1, -1),
            _comp("T2xS2", 2, 0, 1, genus=1),
            _comp("T4#3CP2bar", -3, 0, 4, genus=1, pairs=1),
        ),
        symplectic, 4, 2,
    ))
    add(q_model(
        "q6_model",
        (
            t4_blown(-1, -1),
            _comp("T2xS2", 2, 0, 1, genus=1),
            _comp("F_1(1)#5CP2bar", 0, -3, 6, genus=1),
        ),
        symplectic, 6, 1,
    ))
    add(q_model(
        "q7_model",
        (
            _comp("F_1(1)", 3, -1, 1, genus=1),
            _comp("F_4(1)", 6, -4, 1, genus=1),
            _comp("T4#7CP2bar", -7, 0, 8, genus=1, pairs=1),
        ),
        symplectic, 7, 1,
    ))
    add(q_model(
        "q9_model", (), _ext("fiber sum of E(1) with T2xT2"), 9, 1, incomplete=True,
        notes=("components are the torus-based versions of the drawn-only CP2#9CP2bar pieces",),
    ))
    return {p.name: p for p in entries}


CATALOG: dict[str, Pinwheel] = _build()


def catalog_names() -> list[str]:
    return list(CATALOG)


def catalog_lookup(name: str) -> Pinwheel:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


# ---------------------------------------------------------------------------
# JSON

def _surface_json(s: InterfaceSurface) -> dict:
    return {"genus": s.genus, "self_int": s.self_int}


def pinwheel_to_json(p: Pinwheel) -> dict[str, Any]:
    return {
        "name": p.name,
        "components": [
            {
                "name": c.name,
                "s": _surface_json(c.s),
                "t": _surface_json(c.t),
                "euler": c.euler,
                "htc_at_t": c.htc_at_t,
                "push_through_eligible": c.push_through_eligible,
                "surgered_bing_pairs": c.surgered_bing_pairs,
            }
            for c in p.components
        ],
        "certification": (
            None if p.certification is None
            else {"kind": p.certification.kind, "cite": p.certification.cite}
        ),
        "target": p.target.as_dict(),
        "surgered_pairs": p.surgered_pairs,
        "incomplete": p.incomplete,
        "notes": list(p.notes),
    }


def pinwheel_from_json(data: dict[str, Any]) -> Pinwheel:
    comps = tuple(
        PinwheelComponent(
            name=c["name"],
            s=InterfaceSurface(c["s"]["genus"], c["s"]["self_int"]),
            t=InterfaceSurface(c["t"]["genus"], c["t"]["self_int"]),
            euler=c["euler"],
            htc_at_t=c.get("htc_at_t", False),
            push_through_eligible=c.get("push_through_eligible", False),
            surgered_bing_pairs=c.get("surgered_bing_pairs", 0),
        )
        for c in data["components"]
    )
    cert = data.get("certification")
    target = data["target"]
    return Pinwheel(
        name=data["name"],
        components=comps,
        certification=None if cert is None else Certification(cert["kind"], cert.get("cite")),
        target=SurgeryInvariants.from_betti(target["b1"], target["b_plus"], target["b_minus"]),
        surgered_pairs=data.get("surgered_pairs"),
        incomplete=data.get("incomplete", False),
        notes=tuple(data.get("notes", ())),
    )


def dumps(p: Pinwheel) -> str:
    return json.dumps(pinwheel_to_json(p), indent=2)


def loads(text: str) -> Pinwheel:
    return pinwheel_from_json(json.loads(text))
