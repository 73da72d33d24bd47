"""Abelianization and Todd-Coxeter enumeration over the trivial subgroup.

The enumerator follows the HLT strategy: scan every relator at every live
coset in order, filling gaps with new cosets, and process each deduction
against the relators immediately.  Coincidences are merged with a
union-find forwarding array.  Columns are letters: ``2*g`` is generator
``g`` and ``2*g + 1`` its inverse.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from ..zlin import invariant_factors
from .words import Presentation

DEFAULT_MAX_COSETS = 1_000_000
MAX_COSETS_ENV = "PINWHEEL_FORGE_MAX_COSETS"


def default_max_cosets() -> int:
    raw = os.environ.get(MAX_COSETS_ENV)
    if raw is None:
        return DEFAULT_MAX_COSETS
    value = int(raw)
    if value < 1:
        raise ValueError(f"{MAX_COSETS_ENV} must be positive, got {raw!r}")
    return value


def abelianization(p: Presentation) -> list[int]:
    """Invariant factors of H_1: torsion orders, then a 0 per free summand.

    An empty list means the abelianization is trivial.
    """
    n = len(p.generators)
    rows = [[r.exponent_sum(g) for g in p.generators] for r in p.relators]
    if not rows:
        return [0] * n
    diagonal = invariant_factors(rows)
    torsion = [x for x in diagonal if x > 1]
    free = n - sum(1 for x in diagonal if x)
    return torsion + [0] * free


@dataclass(frozen=True)
class EnumResult:
    status: str  # "finite" or "inconclusive"
    order: Optional[int] = None
    cosets_used: int = 0
    limit: int = 0

    @property
    def is_trivial(self) -> bool:
        return self.status == "finite" and self.order == 1

    def __str__(self) -> str:
        if self.status == "finite":
            return f"finite({self.order})"
        return f"inconclusive(cosets_used={self.cosets_used}, limit={self.limit})"


class _LimitReached(Exception):
    pass


class _CosetTable:
    def __init__(self, ncols: int, limit: int):
        self.ncols = ncols
        self.limit = limit
        self.table: list[list[int]] = [[-1] * ncols]
        self.forward: list[int] = [0]
        self.deductions: list[tuple[int, int]] = []

    def rep(self, c: int) -> int:
        root = c
        while self.forward[root] != root:
            root = self.forward[root]
        while self.forward[c] != root:
            self.forward[c], c = root, self.forward[c]
        return root

    def alive(self, c: int) -> bool:
        return self.forward[c] == c

    def define(self, c: int, x: int) -> int:
        if len(self.table) >= self.limit:
            raise _LimitReached
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.forward.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        self.deductions.append((c, x))
        return d

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.forward[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        table = self.table
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            row = table[dead]
            for x in range(self.ncols):
                target = row[x]
                if target < 0:
                    continue
                row[x] = -1
                if table[target][x ^ 1] == dead:
                    table[target][x ^ 1] = -1
                mu, nu = self.rep(dead), self.rep(target)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu
                    self.deductions.append((mu, x))

    def scan(self, start: int, word: list[int], fill: bool) -> None:
        """Trace ``word`` around ``start`` from both ends.

        A one-letter gap becomes a deduction, a full trace that does not
        close becomes a coincidence.  With ``fill`` the remaining gaps are
        filled with new cosets.
        """
        table = self.table
        f, b = start, start
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                self.deductions.append((f, word[i]))
                return
            if not fill:
                return
            self.define(f, word[i])

    def process_deductions(self, by_letter: list[list[list[int]]]) -> None:
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for word in by_letter[x]:
                self.scan(c, word, fill=False)
                if not self.alive(c):
                    break
            target = self.table[c][x]
            if target < 0 or not self.alive(target):
                continue
            for word in by_letter[x ^ 1]:
                self.scan(target, word, fill=False)
                if not self.alive(target):
                    break


def _letters(p: Presentation) -> list[list[int]]:
    index = {g: i for i, g in enumerate(p.generators)}
    return [[2 * index[g] + (0 if step > 0 else 1) for g, step in r.letters()] for r in p.relators]


def _cyclic_conjugates_by_letter(relators: list[list[int]], ncols: int) -> list[list[list[int]]]:
    by_letter: list[list[list[int]]] = [[] for _ in range(ncols)]
    seen: set[tuple[int, ...]] = set()
    for rel in relators:
        inverse = [x ^ 1 for x in reversed(rel)]
        for w in (rel, inverse):
            for k in range(len(w)):
                rot = tuple(w[k:] + w[:k])
                if rot not in seen:
                    seen.add(rot)
                    by_letter[rot[0]].append(list(rot))
    return by_letter


def todd_coxeter(p: Presentation, max_cosets: Optional[int] = None) -> EnumResult:
    """Enumerate the cosets of the trivial subgroup, i.e. the group elements.

    ``max_cosets`` bounds the number of coset rows ever allocated.
    """
    limit = default_max_cosets() if max_cosets is None else max_cosets
    if limit < 1:
        raise ValueError("max_cosets must be at least 1")
    ncols = 2 * len(p.generators)
    relators = _letters(p)
    by_letter = _cyclic_conjugates_by_letter(relators, ncols)
    t = _CosetTable(ncols, limit)
    try:
        c = 0
        while c < len(t.table):
            if t.alive(c):
                for rel in relators:
                    t.scan(c, rel, fill=True)
                    t.process_deductions(by_letter)
                    if not t.alive(c):
                        break
                if t.alive(c):
                    for x in range(ncols):
                        if t.table[c][x] < 0:
                            t.define(c, x)
                            t.process_deductions(by_letter)
            c += 1
    except _LimitReached:
        return EnumResult("inconclusive", cosets_used=len(t.table), limit=limit)
    live = sum(1 for i in range(len(t.table)) if t.alive(i))
    return EnumResult("finite", order=live, cosets_used=len(t.table), limit=limit)


@dataclass(frozen=True)
class TrivialityVerdict:
    status: str  # "Trivial", "NontrivialH1", "NontrivialPerfect" or "Inconclusive"
    h1_factors: tuple[int, ...] = ()
    enumeration: Optional[EnumResult] = None

    def __str__(self) -> str:
        if self.status == "NontrivialH1":
            return f"NontrivialH1({', '.join(map(str, self.h1_factors))})"
        if self.status == "Inconclusive":
            return f"Inconclusive({self.enumeration})"
        if self.status == "NontrivialPerfect":
            return f"NontrivialPerfect(order={self.enumeration.order})"
        return "Trivial"


def verify_trivial(p: Presentation, max_cosets: Optional[int] = None) -> TrivialityVerdict:
    """Cheap H_1 test first, then coset enumeration."""
    factors = abelianization(p)
    if factors:
        return TrivialityVerdict("NontrivialH1", tuple(factors))
    result = todd_coxeter(p, max_cosets)
    if result.is_trivial:
        return TrivialityVerdict("Trivial", enumeration=result)
    if result.status == "finite":
        # finite perfect group: H_1 vanishes, the group does not
        return TrivialityVerdict("NontrivialPerfect", enumeration=result)
    return TrivialityVerdict("Inconclusive", enumeration=result)
