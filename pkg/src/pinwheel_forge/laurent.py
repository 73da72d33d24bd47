"""Integer Laurent polynomials in one variable ``t``."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported map exponent -> nonzero integer coefficient."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c)))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.from_dict({0: c})

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, n: int) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: n * c for e, c in self.terms})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, mono))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in pieces[1:]:
            text += f" {sign} {mono}"
        return text


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coef>\d+)\s*(?:\*\s*)?)?"
    r"(?P<var>t(?:\s*\^\s*(?P<exp>[+-]?\d+|\(\s*[+-]?\d+\s*\)))?)?\s*"
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse sums of ``c*t^k`` terms, e.g. ``t^-1 - t`` or ``3*t^-1 - 3*t``."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse Laurent polynomial at column {pos + 1}: {src!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing + or - before column {m.start() + 1}: {src!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = int(m.group("coef")) if m.group("coef") else 1
        if m.group("var"):
            exp_text = m.group("exp")
            exp = int(exp_text.strip("() ")) if exp_text else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(coeffs)
