"""Seiberg-Witten bookkeeping on rational surfaces CP2 # (r-1) CP2bar.

Only the arithmetic is modelled: which characteristic classes survive
the adjunction inequality, whether two of them differ by a class of
square -4, and how surgery families move invariants and homology.
"""
from __future__ import annotations

import itertools
import math
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .laurent import LaurentPoly


class ConfinementWarning(UserWarning):
    """The search box, not the constraints, is what bounds a coordinate."""


@dataclass(frozen=True)
class OddLattice:
    """Diagonal form (+1, -1, ..., -1) with basis h, e1, ..., e_{rank-1}."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("lattice rank must be at least 1")

    @property
    def signature(self) -> int:
        return 2 - self.rank

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Pairing of two vectors in standard coordinates (h, e1, ...)."""
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


@dataclass(frozen=True)
class CharClass:
    """``a*h - sum(b_i * e_i)``, stored as ``coeffs = (a, b_1, ..., b_m)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty class")
        if any(c % 2 == 0 for c in self.coeffs):
            raise ValueError(f"{self} is not characteristic: every coefficient must be odd")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def standard(self) -> tuple[int, ...]:
        a, *bs = self.coeffs
        return (a, *(-b for b in bs))

    def square(self) -> int:
        a, *bs = self.coeffs
        return a * a - sum(b * b for b in bs)

    def __neg__(self) -> "CharClass":
        return CharClass(tuple(-c for c in self.coeffs))

    def __str__(self) -> str:
        return format_class(self.standard())


def format_class(standard: Sequence[int]) -> str:
    """Render standard coordinates as ``3h - e1 - e2``."""
    names = ["h"] + [f"e{i}" for i in range(1, len(standard))]
    pieces = []
    for coef, name in zip(standard, names):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        pieces.append(("-" if coef < 0 else "+", mag + name))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    return text + "".join(f" {s} {b}" for s, b in pieces[1:])


_CLASS_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*\*?\s*(h|e(\d+))\s*")


def parse_class(text: str, rank: Optional[int] = None) -> tuple[int, ...]:
    """Parse ``3h - e1 - e2 - e3`` into standard coordinates."""
    coords: dict[int, int] = {}
    pos, first = 0, True
    src = text.strip()
    while pos < len(src):
        m = _CLASS_TERM.match(src, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse class at column {pos + 1}: {src!r}")
        if not first and m.group(1) is None:
            raise ValueError(f"missing + or - before column {m.start() + 1}: {src!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        idx = 0 if m.group(3) == "h" else int(m.group(4))
        if idx == 0 and m.group(3) != "h":
            raise ValueError("exceptional classes are numbered from e1")
        coords[idx] = coords.get(idx, 0) + sign * coef
        pos, first = m.end(), False
    size = max(coords, default=0) + 1 if rank is None else rank
    if coords and max(coords) >= size:
        raise ValueError(f"class {text!r} does not fit in rank {size}")
    return tuple(coords.get(i, 0) for i in range(size))


def class_from_standard(standard: Sequence[int]) -> CharClass:
    a, *rest = standard
    return CharClass((a, *(-x for x in rest)))


@dataclass(frozen=True)
class AdjConstraint:
    """An embedded surface of the given genus in class ``surface_class``.

    ``surface_class`` is in standard coordinates (h, e1, ...).
    """

    surface_class: tuple[int, ...]
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")


def satisfies_adjunction(lat: OddLattice, kappa: CharClass, c: AdjConstraint) -> bool:
    s = c.surface_class
    return abs(lat.dot(kappa.standard(), s)) + lat.dot(s, s) <= 2 * c.genus - 2


def _unconfined_coordinates(lat: OddLattice, constraints: Sequence[AdjConstraint], bound: int) -> list[int]:
    """Coordinates whose linear relaxation reaches past ``bound``.

    Each constraint gives ``|k.S| <= 2g - 2 - S.S``; the quadratic
    condition on k^2 is dropped, so this can only over-report.
    """
    rows, rhs = [], []
    for c in constraints:
        s = c.surface_class
        # k.S in the coefficient vector (a, b_1, ...) is a*s0 + sum b_i s_i
        row = [s[0], *s[1:]]
        slack = 2 * c.genus - 2 - lat.dot(s, s)
        rows += [row, [-x for x in row]]
        rhs += [slack, slack]
    a_ub, b_ub = np.array(rows, dtype=float), np.array(rhs, dtype=float)
    loose = []
    for i in range(lat.rank):
        for direction in (1.0, -1.0):
            objective = np.zeros(lat.rank)
            objective[i] = -direction
            res = linprog(objective, A_ub=a_ub, b_ub=b_ub, bounds=[(None, None)] * lat.rank, method="highs")
            if res.status == 2:  # infeasible: nothing survives anyway
                return []
            if res.status == 3 or -res.fun > bound + 1e-9:
                loose.append(i)
                break
    return loose


def enumerate_basic_classes(
    lat: OddLattice,
    constraints: Sequence[AdjConstraint],
    c_square: int,
    bound: int = 5,
) -> list[CharClass]:
    """All characteristic classes in the box ``|coeff| <= bound`` with
    square ``c_square`` that satisfy every adjunction constraint.
    """
    if not constraints:
        raise ValueError("at least one adjunction constraint is required")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    for c in constraints:
        if len(c.surface_class) != lat.rank:
            raise ValueError(f"constraint class {c.surface_class} does not have rank {lat.rank}")
    loose = _unconfined_coordinates(lat, constraints, bound)
    if loose:
        labels = ", ".join("a" if i == 0 else f"b{i}" for i in loose)
        warnings.warn(f"constraints do not confine {labels} within |x| <= {bound}", ConfinementWarning, stacklevel=2)
    odd = [x for x in range(-bound, bound + 1) if x % 2]
    found = []
    for a in odd:
        rest_square = a * a - c_square
        for bs in itertools.product(odd, repeat=lat.rank - 1):
            if sum(b * b for b in bs) != rest_square:
                continue
            kappa = CharClass((a, *bs))
            if all(satisfies_adjunction(lat, kappa, c) for c in constraints):
                found.append(kappa)
    return sorted(found, key=lambda k: k.coeffs)


def standard_constraints(rank: int) -> list[AdjConstraint]:
    """Surfaces used for the rational-surface families.

    ``h - e_i`` by genus 2, ``e_i`` by tori and ``h`` by genus 3.
    """
    m = rank - 1

    def unit(i):
        return tuple(int(j == i) for j in range(rank))

    out = [AdjConstraint(tuple(x - y for x, y in zip(unit(0), unit(i))), 2) for i in range(1, m + 1)]
    out += [AdjConstraint(unit(i), 1) for i in range(1, m + 1)]
    out.append(AdjConstraint(unit(0), 3))
    return out


# ---------------------------------------------------------------------------
# minimality

@dataclass(frozen=True)
class MinimalityReport:
    status: str  # "Minimal" or "PossiblyNonminimal"
    witness: Optional[tuple[CharClass, CharClass]]
    difference_squares: tuple[int, ...]

    @property
    def minimal(self) -> bool:
        return self.status == "Minimal"


def minimality_check(classes: Iterable[CharClass]) -> MinimalityReport:
    """Look for two basic classes whose difference has square -4.

    The input is closed under negation first.
    """
    pool = set(classes)
    pool |= {-k for k in pool}
    ordered = sorted(pool, key=lambda k: k.coeffs)
    squares = set()
    witness = None
    for k1, k2 in itertools.permutations(ordered, 2):
        if k1.rank != k2.rank:
            raise ValueError("classes of different rank")
        a1, *b1 = k1.coeffs
        a2, *b2 = k2.coeffs
        sq = (a1 - a2) ** 2 - sum((x - y) ** 2 for x, y in zip(b1, b2))
        squares.add(sq)
        if sq == -4 and witness is None:
            witness = (k1, k2)
    status = "Minimal" if witness is None else "PossiblyNonminimal"
    return MinimalityReport(status, witness, tuple(sorted(squares)))


# ---------------------------------------------------------------------------
# surgery families

def mms_family(f_infty: LaurentPoly, f_zero: LaurentPoly, n: int) -> LaurentPoly:
    """Invariant of the 1/n surgery: ``f_infty + n * f_zero``."""
    return f_infty + f_zero.scale(n)


def mms_scalar_values(n: int) -> dict[tuple[int, int], int]:
    """The four readings of ``+-1 +- n`` keyed by their sign pair."""
    return {(s1, s2): s1 + s2 * n for s1 in (1, -1) for s2 in (1, -1)}


def distinguishing_invariant(f: LaurentPoly) -> int:
    return max((abs(c) for _, c in f.terms), default=0)


NULLHOMOLOGOUS = "nullhomologous"
CURVE_NULLHOMOLOGOUS = "curve_nullhomologous"


def surgery_h1(h1_factors: Sequence[int], p: int, q: int, torus_kind: str) -> list[int]:
    """H_1 after p/q surgery on a torus, as a list of cyclic factors.

    A nullhomologous torus adds Z/p (Z when p = 0).  When only the
    surgery curve is nullhomologous, only 1/q surgery is handled, and it
    leaves H_1 unchanged.
    """
    if math.gcd(p, q) != 1:
        raise ValueError(f"surgery coefficient {p}/{q} is not in lowest terms")
    factors = list(h1_factors)
    if torus_kind == NULLHOMOLOGOUS:
        if p == 0:
            return factors + [0]
        if abs(p) == 1:
            return factors
        return factors + [abs(p)]
    if torus_kind == CURVE_NULLHOMOLOGOUS:
        if abs(p) == 1:
            return factors
        raise ValueError(f"p/q = {p}/{q} surgery on a {torus_kind} torus is not supported")
    raise ValueError(f"unknown torus kind {torus_kind!r}")


@dataclass(frozen=True)
class FeasibilityReport:
    k: int
    surgered_components: int
    required_genus: int
    lower_bound: int
    technique_bound: int
    feasible: bool

    @property
    def within_technique(self) -> bool:
        return self.required_genus >= self.technique_bound


TECHNIQUE_MIN_GENUS = 3


def canonical_genus_feasibility(k: int, surgered_components: int) -> FeasibilityReport:
    """Can Bing-pair surgery on ``s`` components realise the canonical genus?

    The target genus is 10 - k; starting from a torus, each surgered
    component adds at least 2.
    """
    if not 2 <= k <= 9:
        raise ValueError(f"k must lie in 2..9, got {k}")
    if surgered_components < 1:
        raise ValueError("at least one component must be surgered")
    required = 10 - k
    lower = 1 + 2 * surgered_components
    return FeasibilityReport(k, surgered_components, required, lower, TECHNIQUE_MIN_GENUS, required >= lower)
