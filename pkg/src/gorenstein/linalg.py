"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``.  Sparse vectors (dicts keyed by
any hashable coordinate label) are used where the ambient basis is large or
open-ended, e.g. spans of polynomials keyed by monomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

Matrix = list[list[Fraction]]


class SingularMatrixError(ArithmeticError):
    pass


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = to_matrix(a)
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {x : a x = 0}, one vector per free column."""
    if not a:
        n = ncols or 0
        return identity(n)
    r, pivots = rref(a)
    n = len(r[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(r, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant via fraction-free (Bareiss) elimination."""
    m = to_matrix(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return Fraction(0)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(to_matrix(a), identity(n))]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in r]


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a x = b for square nonsingular a."""
    return matvec(inverse(a), [Fraction(x) for x in b])


class EchelonBasis:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Vectors are dicts ``label -> Fraction``.  Each stored row has a distinct
    pivot label at which it is 1 and at which every other row is 0, so
    membership tests and coordinate reduction are single passes.
    """

    def __init__(self) -> None:
        self.rows: dict[Hashable, dict[Hashable, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[Hashable, Fraction]) -> dict[Hashable, Fraction]:
        v = {k: c for k, c in vec.items() if c}
        for piv, row in self.rows.items():
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: dict[Hashable, Fraction]) -> bool:
        """Insert vec; return True iff it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=_label_key)
        inv = 1 / v[piv]
        v = {k: c * inv for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def contains(self, vec: dict[Hashable, Fraction]) -> bool:
        return not self.reduce(vec)


def _label_key(label):
    # deterministic pivot choice for tuple/int labels
    return label
