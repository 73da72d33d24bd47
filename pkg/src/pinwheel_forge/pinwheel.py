"""Pinwheel data model and the arithmetic that certifies a cyclic gluing.

A k-fold pinwheel is a cyclic list of components C_0 .. C_{k-1}.  Each
component carries two interface surfaces, S (glued to the previous
component) and T (glued to the next).  Interface ``j`` is the seam
between ``C_j.t`` and ``C_{j+1}.s``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .validation import ValidationReport
from .zlin import MatZ2, mat2_product


class PinwheelError(ValueError):
    """Raised when an operation's precondition fails on a pinwheel."""


# ---------------------------------------------------------------------------
# data model

@dataclass(frozen=True)
class InterfaceSurface:
    genus: int
    self_int: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")


@dataclass(frozen=True)
class PinwheelComponent:
    name: str
    s: InterfaceSurface
    t: InterfaceSurface
    euler: int
    htc_at_t: bool = False
    push_through_eligible: bool = False
    surgered_bing_pairs: int = 0
    meridian: Optional[str] = None  # set once the component has been pushed through

    def __post_init__(self):
        if self.surgered_bing_pairs < 0:
            raise ValueError("surgered_bing_pairs must be non-negative")


@dataclass(frozen=True)
class Certification:
    kind: str  # "matrix" or "external"
    cite: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("matrix", "external"):
            raise ValueError(f"unknown certification kind {self.kind!r}")
        if self.kind == "external" and not self.cite:
            raise ValueError("external certification needs a citation string")


MATRIX = Certification("matrix")


@dataclass(frozen=True)
class SurgeryInvariants:
    """Betti bookkeeping with b3 = b1, so euler = 2 - 2*b1 + b_plus + b_minus."""

    b1: int
    b_plus: int
    b_minus: int
    euler: int
    signature: int

    def __post_init__(self):
        if min(self.b1, self.b_plus, self.b_minus) < 0:
            raise ValueError("Betti numbers must be non-negative")
        if self.euler != 2 - 2 * self.b1 + self.b_plus + self.b_minus:
            raise ValueError(f"inconsistent Euler characteristic in {self}")
        if self.signature != self.b_plus - self.b_minus:
            raise ValueError(f"inconsistent signature in {self}")

    @classmethod
    def from_betti(cls, b1: int, b_plus: int, b_minus: int) -> "SurgeryInvariants":
        return cls(b1, b_plus, b_minus, 2 - 2 * b1 + b_plus + b_minus, b_plus - b_minus)

    def as_dict(self) -> dict:
        return {"euler": self.euler, "b_plus": self.b_plus, "b_minus": self.b_minus, "b1": self.b1}


@dataclass(frozen=True)
class Pinwheel:
    name: str
    components: tuple[PinwheelComponent, ...]
    certification: Optional[Certification]
    target: SurgeryInvariants
    surgered_pairs: Optional[int] = None
    incomplete: bool = False
    notes: tuple[str, ...] = ()

    @property
    def k(self) -> int:
        return len(self.components)

    def gluing_parameters(self) -> list[int]:
        """The sequence a_i = n_i + m_{i+1} feeding the monodromy."""
        comps = self.components
        return [comps[i].t.self_int + comps[(i + 1) % len(comps)].s.self_int for i in range(len(comps))]

    def euler_sum(self) -> int:
        return sum(c.euler for c in self.components)

    def interface_label(self, j: int) -> str:
        k = self.k
        return f"interface {j} ({self.components[j].name}.T | {self.components[(j + 1) % k].name}.S)"


# ---------------------------------------------------------------------------
# gluing matrices

def gluing_phi() -> MatZ2:
    return MatZ2(0, 1, -1, 0)


def gluing_alpha(m: int) -> MatZ2:
    return MatZ2(1, m, 0, -1)


def gluing_beta(n: int) -> MatZ2:
    return MatZ2(-1, 0, n, 1)


def theta(a: int) -> MatZ2:
    return MatZ2(a, 1, -1, 0)


@dataclass(frozen=True)
class MonodromyVerdict:
    kind: str  # "PlusId", "MinusId" or "Neither"
    product: MatZ2

    @property
    def certifies(self) -> bool:
        return self.kind != "Neither"

    def __str__(self) -> str:
        return self.kind if self.certifies else f"Neither({self.product})"


def monodromy_check(a_seq: Sequence[int]) -> MonodromyVerdict:
    if not a_seq:
        raise ValueError("monodromy_check needs a non-empty sequence")
    product = mat2_product([theta(a) for a in a_seq])
    if product == MatZ2.identity():
        return MonodromyVerdict("PlusId", product)
    if product == -MatZ2.identity():
        return MonodromyVerdict("MinusId", product)
    return MonodromyVerdict("Neither", product)


# ---------------------------------------------------------------------------
# continued fractions on the projective line

@dataclass(frozen=True)
class ExtRational:
    """A point of Q u {inf}.  ``value is None`` is the point at infinity."""

    value: Optional[Fraction]

    @classmethod
    def of(cls, x) -> "ExtRational":
        return cls(Fraction(x))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def reciprocal(self) -> "ExtRational":
        if self.value is None:
            return ExtRational(Fraction(0))
        if self.value == 0:
            return INFINITY
        return ExtRational(1 / self.value)

    def rsub_from(self, c: int) -> "ExtRational":
        """``c - self``, with ``c - inf = inf``."""
        if self.value is None:
            return INFINITY
        return ExtRational(c - self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtRational):
            return self.value == other.value
        if other is None:
            return False
        try:
            return self.value is not None and self.value == Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = ExtRational(None)


def continued_fraction(c_seq: Sequence[int]) -> ExtRational:
    """Evaluate ``c_1 - 1/(c_2 - 1/(... - 1/c_p))``; the empty sequence is infinity."""
    x = INFINITY
    for c in reversed(c_seq):
        x = x.reciprocal().rsub_from(c)
    return x


def cyclic_continued_fractions(a_seq: Sequence[int]) -> list[ExtRational]:
    k = len(a_seq)
    return [continued_fraction([a_seq[(i + j) % k] for j in range(k - 1)]) for i in range(k)]


def cyclic_cf_all_zero(a_seq: Sequence[int]) -> bool:
    if len(a_seq) < 3:
        raise ValueError(f"cyclic continued fractions need length >= 3, got {len(a_seq)}")
    all_zero = all(v == 0 for v in cyclic_continued_fractions(a_seq))
    if all_zero and not monodromy_check(a_seq).certifies:
        raise ArithmeticError(f"cyclic fractions vanish but monodromy is not +-Id for {list(a_seq)}")
    return all_zero


# ---------------------------------------------------------------------------
# validation and moves

def validate_pinwheel(p: Pinwheel) -> ValidationReport:
    report = ValidationReport(incomplete=p.incomplete)
    comps = p.components
    k = len(comps)
    if k == 0:
        # tolerated only on entries already flagged incomplete
        report.add("components", p.incomplete, "no component data recorded")
    for j in range(k):
        left, right = comps[j].t.genus, comps[(j + 1) % k].s.genus
        report.add(f"genus[{j}]", left == right, f"{p.interface_label(j)}: g(T)={left}, g(S)={right}")
    if p.certification is not None and p.certification.kind == "matrix" and k:
        a_seq = p.gluing_parameters()
        verdict = monodromy_check(a_seq)
        report.add("monodromy", verdict.certifies, f"a={a_seq} -> {verdict}")
    elif p.certification is not None:
        report.add("certification", True, f"external: {p.certification.cite}")
    if k:
        total = p.euler_sum()
        report.add("euler", total == p.target.euler, f"sum={total}, target={p.target.euler}")
        if p.surgered_pairs is not None:
            listed = sum(c.surgered_bing_pairs for c in comps)
            report.add(
                "surgered_pairs", listed == p.surgered_pairs,
                f"components carry {listed}, entry records {p.surgered_pairs}",
            )
    return report


def _with_genus(surface: InterfaceSurface, genus: int) -> InterfaceSurface:
    return replace(surface, genus=genus)


def handle_trade(p: Pinwheel, interfaces: Optional[Sequence[int]] = None) -> Pinwheel:
    """Trade handles across interfaces, raising their genus from 0 to 1.

    With ``interfaces=None`` every interface is traded.  Each traded
    interface must have genus 0 and satisfy the handle trading condition.
    Euler characteristics and self-intersections are untouched.
    """
    k = p.k
    if k == 0:
        raise PinwheelError(f"{p.name} has no component data")
    chosen = range(k) if interfaces is None else sorted(set(interfaces))
    comps = list(p.components)
    for j in chosen:
        if not 0 <= j < k:
            raise PinwheelError(f"interface index {j} out of range for a {k}-fold pinwheel")
        label = p.interface_label(j)
        nxt = (j + 1) % k
        if comps[j].t.genus != 0 or comps[nxt].s.genus != 0:
            raise PinwheelError(f"{label} already has positive genus")
        if not comps[j].htc_at_t:
            raise PinwheelError(f"handle trading condition fails at {label}")
    for j in chosen:
        nxt = (j + 1) % k
        comps[j] = replace(comps[j], t=_with_genus(comps[j].t, 1))
        comps[nxt] = replace(comps[nxt], s=_with_genus(comps[nxt].s, 1))
    return replace(p, components=tuple(comps))


def push_through(p: Pinwheel, index: int) -> Pinwheel:
    """Push a Bing pair through a component whose two meridians are isotopic.

    Both interfaces of the component become tori, and the component gains
    a meridian generator ``mu`` whose relation is supplied by the group
    builders.  The previous interface must already satisfy the handle
    trading condition.
    """
    k = p.k
    if not 0 <= index < k:
        raise PinwheelError(f"component index {index} out of range")
    comps = list(p.components)
    target = comps[index]
    if not target.push_through_eligible:
        raise PinwheelError(f"component {target.name} is not eligible for pushing through")
    prev, nxt = (index - 1) % k, (index + 1) % k
    if not comps[prev].htc_at_t:
        raise PinwheelError(f"handle trading condition fails at {p.interface_label(prev)}")
    comps[prev] = replace(comps[prev], t=_with_genus(comps[prev].t, 1))
    comps[index] = replace(
        target,
        s=_with_genus(target.s, 1),
        t=_with_genus(target.t, 1),
        htc_at_t=True,
        meridian="mu",
    )
    comps[nxt] = replace(comps[nxt], s=_with_genus(comps[nxt].s, 1))
    return replace(p, components=tuple(comps))


def apply_standard_surgeries(inv: SurgeryInvariants, bing_pairs: int) -> SurgeryInvariants:
    """Each torus surgery adds one to b1 and a hyperbolic pair to H_2."""
    if bing_pairs < 0:
        raise ValueError("bing_pairs must be non-negative")
    out = inv
    for _ in range(2 * bing_pairs):
        out = SurgeryInvariants(
            out.b1 + 1, out.b_plus + 1, out.b_minus + 1, out.euler, out.signature
        )
    return out
