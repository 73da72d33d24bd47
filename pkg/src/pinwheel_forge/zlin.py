"""Exact integer linear algebra.

Everything here works on Python ints, so there is no overflow to worry
about.  Matrices are immutable tuples of tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MatZ2:
    """A 2x2 integer matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> "MatZ2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "MatZ2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MatZ2") -> "MatZ2":
        return MatZ2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "MatZ2":
        return MatZ2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "MatZ2":
        """Inverse over the integers; only defined when det is +1 or -1."""
        det = self.det()
        if det not in (1, -1):
            raise ValueError(f"matrix {self.rows()} is not invertible over Z (det={det})")
        return MatZ2(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mat2_product(factors: Sequence[MatZ2]) -> MatZ2:
    """Composite of ``factors`` applied in list order.

    The first element acts first, so ``[f1, f2, f3]`` gives ``f3 @ f2 @ f1``.
    """
    if not factors:
        raise ValueError("mat2_product needs at least one factor")
    result = factors[0]
    for m in factors[1:]:
        result = m @ result
    return result


# ---------------------------------------------------------------------------
# general integer matrices

def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have differing lengths")
    return out


def shape(m: IntMatrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def matmul(x: IntMatrix, y: IntMatrix) -> IntMatrix:
    n, k = shape(x)
    k2, m = shape(y)
    if k != k2:
        raise ValueError(f"shape mismatch {n}x{k} @ {k2}x{m}")
    cols = list(zip(*y)) if y else [()] * m
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x)


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m))


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n, cols = shape(m)
    if n != cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``D == U @ m @ V``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries, each dividing the next.  The certificates can get very large;
    use ``invariant_factors`` when only ``D`` matters.
    """
    return _smith(m, track=True)


def _smith(m, track: bool):
    rows, cols = shape(m)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        if track:
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col[dst] += k * col[src]
        for r in a:
            r[dst] += k * r[src]
        if track:
            for r in v:
                r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return as_matrix(a), as_matrix(u), as_matrix(v)


def invariant_factors(m: IntMatrix) -> list[int]:
    """Diagonal of the Smith form, including zeros, length ``min(rows, cols)``."""
    d, _, _ = _smith(m, track=False)
    return [d[i][i] for i in range(min(shape(m)))]


# ---------------------------------------------------------------------------
# symmetric bilinear forms

@dataclass(frozen=True)
class FormReport:
    rank: int
    signature: int
    parity: str  # "even" or "odd"
    radical_rank: int

    @property
    def b_plus(self) -> int:
        return (self.rank + self.signature) // 2

    @property
    def b_minus(self) -> int:
        return (self.rank - self.signature) // 2


def characteristic_polynomial(m: IntMatrix) -> list[int]:
    """Coefficients of ``det(x I - m)``, constant term first.

    Faddeev-LeVerrier; every division is exact over the integers.
    """
    n, cols = shape(m)
    if n != cols:
        raise ValueError("matrix must be square")
    coeffs = [0] * n + [1]
    acc = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # acc <- m @ acc + c_{n-k+1} I
        acc = [[sum(m[i][t] * acc[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            acc[i][i] += coeffs[n - k + 1]
        trace = sum(m[i][t] * acc[t][i] for i in range(n) for t in range(n))
        coeffs[n - k] = -trace // k
    return coeffs


def gram_analyze(gram: IntMatrix) -> FormReport:
    """Rank, signature, parity and radical rank of a symmetric integer form.

    A symmetric matrix has only real eigenvalues, so Descartes' rule of
    signs on its characteristic polynomial counts the positive ones
    exactly.  Parity of the form on the lattice modulo its radical agrees
    with parity on the whole lattice, since ``x.x`` is congruent to
    ``sum x_i g_ii`` mod 2.
    """
    gram = as_matrix(gram)
    n, cols = shape(gram)
    if n != cols:
        raise ValueError("Gram matrix must be square")
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
        raise ValueError("Gram matrix must be symmetric")
    coeffs = characteristic_polynomial(gram)
    radical_rank = next(i for i, c in enumerate(coeffs) if c)
    rank = n - radical_rank
    signs = [c > 0 for c in coeffs[radical_rank:] if c]
    positive = sum(1 for x, y in zip(signs, signs[1:]) if x != y)
    signature = 2 * positive - rank
    parity = "even" if all(gram[i][i] % 2 == 0 for i in range(n)) else "odd"
    return FormReport(rank=rank, signature=signature, parity=parity, radical_rank=radical_rank)
