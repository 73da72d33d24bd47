"""Torus actions on simply connected 4-manifolds, from orbit data.

Orbit data is a cyclic list of coprime pairs ``(p_i, q_i)`` in which
adjacent pairs form a unimodular 2x2 matrix.  Each pair labels an
invariant sphere; from the determinants we get the sphere configuration,
its intersection form and a pinwheel.
"""
from __future__ import annotations

import functools
import math
import random
import re
from dataclasses import dataclass
from typing import Sequence

from .pinwheel import (
    MATRIX,
    InterfaceSurface,
    Pinwheel,
    PinwheelComponent,
    PinwheelError,
    SurgeryInvariants,
    monodromy_check,
)
from .validation import ValidationReport
from .zlin import FormReport, IntMatrix, gram_analyze


@dataclass(frozen=True)
class OrbitData:
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: Sequence[Sequence[int]]) -> "OrbitData":
        return cls(tuple((int(p), int(q)) for p, q in pairs))

    @property
    def k(self) -> int:
        return len(self.pairs)

    def det(self, r: int, s: int) -> int:
        """D(r, s) = p_r q_s - p_s q_r, indices taken cyclically."""
        k = self.k
        (pr, qr), (ps, qs) = self.pairs[r % k], self.pairs[s % k]
        return pr * qs - ps * qr

    def rotated(self, shift: int) -> "OrbitData":
        shift %= self.k
        return OrbitData(self.pairs[shift:] + self.pairs[:shift])

    def reversed(self) -> "OrbitData":
        return OrbitData(self.pairs[::-1])

    def __str__(self) -> str:
        return ";".join(f"({p},{q})" for p, q in self.pairs)


class OrbitDataError(ValueError):
    pass


_PAIR = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")


def parse_orbit_data(text: str) -> OrbitData:
    """Parse ``(1,-1);(0,1);...``.  Whitespace is ignored."""
    chunks = [c for c in (part.strip() for part in text.split(";")) if c]
    if not chunks:
        raise OrbitDataError("no pairs in orbit data")
    pairs = []
    for idx, chunk in enumerate(chunks):
        m = _PAIR.fullmatch(chunk)
        if m is None:
            raise OrbitDataError(f"pair {idx}: cannot parse {chunk!r}, expected (p,q)")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return OrbitData(tuple(pairs))


def validate_orbit_data(d: OrbitData) -> ValidationReport:
    report = ValidationReport()
    k = d.k
    if k < 2:
        report.add("length", False, f"need at least 2 pairs, got {k}")
        return report
    for i, (p, q) in enumerate(d.pairs):
        g = math.gcd(p, q)
        report.add(f"gcd[{i}]", g == 1, f"gcd{(p, q)} = {g}")
    for i in range(k):
        det = d.det(i - 1, i)
        report.add(f"det[{i}]", abs(det) == 1, f"pairs {(i - 1) % k} and {i}: det = {det}")
    return report


def _require_valid(d: OrbitData) -> None:
    report = validate_orbit_data(d)
    if not report.ok:
        raise OrbitDataError("invalid orbit data: " + "; ".join(
            f"{i.name} ({i.detail})" for i in report.failures()))


@dataclass(frozen=True)
class SphereConfig:
    self_ints: tuple[int, ...]
    adjacents: tuple[int, ...]  # adjacents[i] = A_{i-1} . A_i

    @property
    def k(self) -> int:
        return len(self.self_ints)

    @property
    def b2(self) -> int:
        return self.k - 2

    def gram(self) -> IntMatrix:
        k = self.k
        g = [[0] * k for _ in range(k)]
        for i in range(k):
            g[i][i] = self.self_ints[i]
        for i in range(k):
            j = (i - 1) % k
            # for k == 2 the two spheres meet twice with opposite signs
            g[i][j] += self.adjacents[i]
            g[j][i] += self.adjacents[i]
        return tuple(tuple(row) for row in g)


def sphere_geometry(d: OrbitData) -> SphereConfig:
    """Self-intersections and adjacent intersection numbers of the spheres.

    A_i^2 is the product D(i-1,i) * D(i,i+1) * D(i-1,i+1); adjacent
    spheres meet with sign -D(i-1,i), which keeps the form of rank k - 2
    under that orientation of the self-intersections.
    """
    _require_valid(d)
    k = d.k
    self_ints = tuple(d.det(i - 1, i) * d.det(i, i + 1) * d.det(i - 1, i + 1) for i in range(k))
    adjacents = tuple(-d.det(i - 1, i) for i in range(k))
    return SphereConfig(self_ints, adjacents)


@dataclass(frozen=True)
class ClassificationResult:
    kind: str  # "S4" or "sum"
    cp2_count: int = 0
    cp2bar_count: int = 0
    s2xs2_count: int = 0
    form: FormReport | None = None

    def __str__(self) -> str:
        if self.kind == "S4":
            return "S4"
        parts = []
        if self.cp2_count:
            parts.append(f"{self.cp2_count} x CP2")
        if self.cp2bar_count:
            parts.append(f"{self.cp2bar_count} x CP2bar")
        if self.s2xs2_count:
            parts.append(f"{self.s2xs2_count} x S2xS2")
        return " # ".join(parts)

    def invariants(self) -> SurgeryInvariants:
        if self.kind == "S4":
            return SurgeryInvariants.from_betti(0, 0, 0)
        b_plus = self.cp2_count + self.s2xs2_count
        b_minus = self.cp2bar_count + self.s2xs2_count
        return SurgeryInvariants.from_betti(0, b_plus, b_minus)


def classify_action(d: OrbitData) -> ClassificationResult:
    config = sphere_geometry(d)
    form = gram_analyze(config.gram())
    if form.rank != config.b2:
        raise ArithmeticError(f"form rank {form.rank} differs from k-2 = {config.b2} for {d}")
    if form.rank == 0:
        return ClassificationResult("S4", form=form)
    if form.parity == "odd":
        return ClassificationResult(
            "sum",
            cp2_count=(form.rank + form.signature) // 2,
            cp2bar_count=(form.rank - form.signature) // 2,
            form=form,
        )
    if form.signature != 0:
        raise ArithmeticError(f"even form with signature {form.signature} for {d}")
    return ClassificationResult("sum", s2xs2_count=form.rank // 2, form=form)


def barycentric_pinwheel(d: OrbitData, name: str | None = None) -> Pinwheel:
    """Subdivide each orbit edge in half to get a k-fold pinwheel.

    Component i is the complement of a fiber and a section in the ruled
    surface F_|r_i|, where r_i = A_i^2; its S interface carries r_i and its
    T interface carries 0.
    """
    _require_valid(d)
    if d.k < 3:
        raise OrbitDataError(f"a pinwheel needs at least 3 fixed points, got {d.k}")
    config = sphere_geometry(d)
    comps = tuple(
        PinwheelComponent(
            name=f"F_{abs(r)}-complement",
            s=InterfaceSurface(0, r),
            t=InterfaceSurface(0, 0),
            euler=1,
            htc_at_t=True,
        )
        for r in config.self_ints
    )
    target = classify_action(d).invariants()
    pinwheel = Pinwheel(name or f"orbit {d}", comps, MATRIX, target)
    verdict = monodromy_check(pinwheel.gluing_parameters())
    if not verdict.certifies:
        raise PinwheelError(f"barycentric pinwheel for {d} does not close: {verdict}")
    return pinwheel


@functools.lru_cache(maxsize=16)
def _unimodular_graph(bound: int):
    box = range(-bound, bound + 1)
    primitive = [(p, q) for p in box for q in box if math.gcd(p, q) == 1]
    neighbours = {
        v: [w for w in primitive if abs(v[0] * w[1] - w[0] * v[1]) == 1] for v in primitive
    }
    return primitive, neighbours


def random_orbit_data(rng: random.Random, k: int, bound: int = 5, max_tries: int = 100_000) -> OrbitData:
    """Sample valid orbit data with k pairs and entries bounded by ``bound``.

    Each new pair is drawn among those unimodular against the previous
    one; the cycle is accepted once the last pair closes up with the first.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    primitive, neighbours = _unimodular_graph(bound)
    for _ in range(max_tries):
        chain = [rng.choice(primitive)]
        for _ in range(k - 1):
            chain.append(rng.choice(neighbours[chain[-1]]))
        first, last = chain[0], chain[-1]
        if abs(last[0] * first[1] - first[0] * last[1]) == 1:
            return OrbitData(tuple(chain))
    raise RuntimeError(f"no closed orbit data found after {max_tries} tries")
