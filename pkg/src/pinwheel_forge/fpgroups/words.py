"""Free-group words, presentations and the presentation text format.

Text format::

    gens: a b c ;
    rels: [a,b], a^3, b (a c)^-2   # comments run to end of line

A word is a run of terms; a term is an atom with an optional integer
exponent; an atom is a generator, ``1``, ``[u,v]`` or ``(u)``.  Relators are
separated by top-level commas.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Syllable = tuple[str, int]

# [u,v] = u v u^-1 v^-1 ("standard") or u^-1 v^-1 u v ("inverse_first")
COMMUTATOR_CONVENTIONS = ("standard", "inverse_first")


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word, stored as (generator, exponent) syllables."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        return cls(((name, exp),))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def letters(self) -> Iterator[tuple[str, int]]:
        """Expand into unit letters ``(gen, +1 or -1)``."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.syllables if g == gen)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


def commutator(u: Word, v: Word, convention: str = "standard") -> Word:
    if convention == "standard":
        return u * v * u.inverse() * v.inverse()
    if convention == "inverse_first":
        return u.inverse() * v.inverse() * u * v
    raise ValueError(f"unknown commutator convention {convention!r}")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        declared = set(self.generators)
        for r in self.relators:
            missing = r.generators() - declared
            if missing:
                raise ValueError(f"relator {r} uses undeclared generators {sorted(missing)}")

    def __str__(self) -> str:
        return format_presentation(self)


def format_presentation(p: Presentation) -> str:
    rels = ", ".join(str(r) for r in p.relators)
    return f"gens: {' '.join(p.generators)} ; rels: {rels}"


# ---------------------------------------------------------------------------
# parser

class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+|\#[^\n]*)"
    r"|(?P<kw>(?:gens|rels)\s*:)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>[+-]?\d+)"
    r"|(?P<sym>[\[\](),;^])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "kw":
                value = value.split(":")[0].strip()
            toks.append(_Tok(kind, value, line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, convention: str):
        if convention not in COMMUTATOR_CONVENTIONS:
            raise ValueError(f"unknown commutator convention {convention!r}")
        self.toks = _tokenize(text)
        self.i = 0
        self.convention = convention
        self.gens: list[str] = []

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise PresentationSyntaxError(message, tok.line, tok.col)

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text else kind
            got = repr(tok.text) if tok.text else tok.kind
            self.fail(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def at(self, kind: str, text: str | None = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def presentation(self) -> Presentation:
        self.expect("kw", "gens")
        while self.at("ident"):
            tok = self.expect("ident")
            if tok.text in self.gens:
                self.fail(f"generator {tok.text!r} declared twice", tok)
            self.gens.append(tok.text)
        if not self.gens:
            self.fail("at least one generator is required")
        self.expect("sym", ";")
        self.expect("kw", "rels")
        relators: list[Word] = []
        if not self.at("eof"):
            relators.append(self.word())
            while self.at("sym", ","):
                self.i += 1
                relators.append(self.word())
        if self.at("sym", ";"):
            self.i += 1
        self.expect("eof")
        return Presentation(tuple(self.gens), tuple(r for r in relators if r))

    def word(self) -> Word:
        result = Word.identity()
        start = self.tok
        while self.at("ident") or self.at("int", "1") or self.at("sym", "[") or self.at("sym", "("):
            result = result * self.term()
        if self.tok is start:
            self.fail("expected a word")
        return result

    def term(self) -> Word:
        atom = self.atom()
        if self.at("sym", "^"):
            self.i += 1
            atom = atom ** int(self.expect("int").text)
        return atom

    def atom(self) -> Word:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            if tok.text not in self.gens:
                self.fail(f"undeclared generator {tok.text!r}", tok)
            return Word.gen(tok.text)
        if self.at("int", "1"):
            self.i += 1
            return Word.identity()
        if self.at("sym", "["):
            self.i += 1
            u = self.word()
            self.expect("sym", ",")
            v = self.word()
            self.expect("sym", "]")
            return commutator(u, v, self.convention)
        self.expect("sym", "(")
        w = self.word()
        self.expect("sym", ")")
        return w


def parse_presentation(text: str, convention: str = "standard") -> Presentation:
    """Parse presentation text; identity relators are dropped."""
    return _Parser(text, convention).presentation()


def parse_word(text: str, generators: Sequence[str], convention: str = "standard") -> Word:
    parser = _Parser(text, convention)
    parser.gens = list(generators)
    w = parser.word()
    parser.expect("eof")
    return w
