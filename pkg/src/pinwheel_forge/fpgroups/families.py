"""Fundamental-group presentations of the exotic surgery families.

Each builder emits presentation text and parses it, so the relators read
the same way they would be typed by hand.  ``n`` is the surgery
coefficient of the last torus, and it replaces one commutator relation by
its n-th power.  For k = 2 and 4, ``kappa`` is the unknown exponent in
``b2 = y0^2 xi^kappa`` with ``xi = y0 [a2, y0] y0^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import Presentation, parse_presentation

SUPPORTED_FAMILIES = (2, 3, 4, 7)


@dataclass(frozen=True)
class FamilyParams:
    k: int
    n: int
    kappa: Optional[int] = None

    def __post_init__(self):
        if self.k not in SUPPORTED_FAMILIES:
            raise ValueError(f"unsupported family k={self.k}; choose from {SUPPORTED_FAMILIES}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.k in (2, 4) and self.kappa is None:
            raise ValueError(f"family k={self.k} needs kappa")


def _pow(word: str, n: int) -> str:
    return word if n == 1 else f"({word})^{n}"


def _xi_block(kappa: int, macro: bool) -> tuple[list[str], list[str]]:
    """Extra generators and the relator defining b2 in terms of y0."""
    if macro:
        xi = "y0 [a2,y0] y0^-1"
        tail = "" if kappa == 0 else f" {_pow(xi, kappa)}"
        return [], [f"b2^-1 y0^2{tail}"]
    tail = "" if kappa == 0 else f" xi^{kappa}"
    return ["xi", "eta"], ["eta^-1 [a2,y0]", "xi^-1 y0 eta y0^-1", f"b2^-1 y0^2{tail}"]


_I0_BLOCK = ["a2[b0^-1,y0^-1]", "y0[a2^-1,b0]", "[a2,a0]", "[y0,a0]", "[b2,a0]"]


def family_text(k: int, n: int, kappa: Optional[int] = None, macro: bool = True) -> str:
    params = FamilyParams(k, n, kappa)
    if params.k == 3:
        gens = ["a0", "a1", "a2", "b0", "b1", "b2"]
        rels = []
        for i in range(3):
            prev = (i - 1) % 3
            a, b, ap, bp = f"a{i}", f"b{i}", f"a{prev}", f"b{prev}"
            rels += [f"[{a},{b}]", f"[{ap},{a}]", f"[{bp},{a}]", f"{ap} [{bp}^-1,{b}^-1]^-1"]
            rels.append(f"{bp} [{b},{ap}^-1]^-{n}" if i == 2 else f"{bp} [{b},{ap}^-1]^-1")
        sections = [("", rels)]
    elif params.k == 2:
        gens = ["a0", "a1", "a2", "b0", "b1", "b2", "y0"]
        block_a = ["a1[b2^-1,b1^-1]", f"b1{_pow('[a1^-1,b2]', n)}", "[a1,a2]", "[b1,a2]"]
        block_hat = ["a0[b1^-1,b0^-1]", "b0[a0^-1,b1]", "[a0,a1]", "[b0,a1]", "[a0,b0]"]
        extra_gens, xi_rels = _xi_block(kappa, macro)
        gens += extra_gens
        sections = [("A", block_a), ("A-hat", block_hat), ("I0", _I0_BLOCK), ("b2", xi_rels)]
    elif params.k == 4:
        gens = ["a0", "b0", "a2", "b2", "y0", "mu"]
        block_hat = [
            "a0[b2^-1,b0^-1]", f"b0{_pow('[a0^-1,b2]', n)}", "[a0,a2]", "[b0,a2]", "[a0,b0]",
        ]
        extra_gens, xi_rels = _xi_block(kappa, macro)
        gens += extra_gens
        sections = [
            ("A-hat(3)", block_hat), ("I0", _I0_BLOCK), ("b2", xi_rels), ("meridian", ["mu [a2,b2]^-1"]),
        ]
    else:
        gens = ["a", "b", "mu0", "mu1"]
        sections = [
            ("A-hat(7)", ["a[b^-1,b^-1]", f"b [b,a^-1]^-{n}", "[b,a]", "[a,b]"]),
            ("meridians", ["mu0 [a,b]^-1", "mu1 [a,b]^-1"]),
        ]
    lines = [f"# family k={k}, n={n}" + ("" if kappa is None else f", kappa={kappa}"), f"gens: {' '.join(gens)} ;", "rels:"]
    body = []
    for label, rels in sections:
        chunk = ",\n".join(f"  {r}" for r in rels)
        body.append((f"  # {label}\n" if label else "") + chunk)
    lines.append(",\n".join(body))
    return "\n".join(lines) + "\n"


def build_family_presentation(
    k: int,
    n: int,
    kappa: Optional[int] = None,
    macro: bool = True,
    convention: str = "standard",
) -> Presentation:
    """Presentation of pi_1 for the family member (k, n[, kappa]).

    With ``macro=False`` the abbreviations xi and eta become generators
    with defining relators instead of being expanded in place.
    """
    return parse_presentation(family_text(k, n, kappa, macro), convention=convention)
