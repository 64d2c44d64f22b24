"""Finite-dimensional local algebras Q[x]/I presented by normal forms."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from . import linalg
from .groebner import (
    DEGREVLEX,
    GroebnerBasis,
    MonomialOrder,
    NotArtinianError,
    buchberger,
    normal_form,
    standard_monomials,
)
from .poly import Monomial, Polynomial, gradient, hessian_det

Vector = tuple[Fraction, ...]


class NotIsolatedSingularityError(NotArtinianError):
    """The Jacobian ideal has an infinite-dimensional quotient."""


class NotLocalError(ValueError):
    pass


class AlgebraTooSmallError(ValueError):
    pass


class NotGorensteinError(ValueError):
    pass


class InconsistencyError(ArithmeticError):
    """An internal identity that must hold failed."""


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """Q[x]/I with a chosen basis; the first basis element is the class of 1.

    ``mult_table[i][j]`` holds the coordinates of ``basis[i]*basis[j]``.
    """

    gb: GroebnerBasis
    standard: tuple[Monomial, ...]
    basis: tuple[Polynomial, ...]
    mult_table: tuple[tuple[Vector, ...], ...]
    to_basis: tuple[Vector, ...] = field(repr=False)
    weights: tuple[int, ...] | None = None
    form: Polynomial | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.gb.variables

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return self.gb.ideal_source

    def coords(self, p: Polynomial) -> Vector:
        nf = normal_form(p, self.gb)
        std = [nf.coefficient(m) for m in self.standard]
        return tuple(linalg.matvec(self.to_basis, std))

    def element(self, v: Sequence[Fraction]) -> Polynomial:
        out = Polynomial.zero(self.variables)
        for c, b in zip(v, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def unit(self) -> Vector:
        return tuple(Fraction(int(i == 0)) for i in range(self.dim))

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        table = self.mult_table
        for i, a in enumerate(u):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def power(self, u: Sequence[Fraction], k: int) -> Vector:
        out = self.unit()
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def maximal_ideal(self) -> list[Vector]:
        """Basis vectors 2..dim: they span the maximal ideal by construction."""
        return [tuple(Fraction(int(i == j)) for i in range(self.dim)) for j in range(1, self.dim)]

    def with_basis(self, polys: Sequence[Polynomial]) -> "QuotientAlgebra":
        """Re-express the algebra in another basis given by representatives."""
        polys = [p.embed(self.variables) if p.variables != self.variables else p for p in polys]
        return _build(self.gb, self.standard, polys, self.weights, self.form)


def _build(gb, standard, polys, weights, form) -> QuotientAlgebra:
    n = len(standard)
    if len(polys) != n:
        raise ValueError(f"a basis needs {n} elements, got {len(polys)}")
    cols = []
    for p in polys:
        nf = normal_form(p, gb)
        cols.append([nf.coefficient(m) for m in standard])
    # standard[0] is the monomial 1; its coordinate is the constant part
    if cols[0] != [Fraction(int(i == 0)) for i in range(n)]:
        raise ValueError("first basis element must be the class of 1")
    if any(c[0] for c in cols[1:]):
        raise ValueError("basis elements after the first must lie in the maximal ideal")
    try:
        to_basis = linalg.inverse(linalg.transpose(cols))
    except linalg.SingularMatrixError:
        raise ValueError("given elements do not form a basis of the quotient") from None
    polys = tuple(polys)

    def coords(p: Polynomial) -> Vector:
        nf = normal_form(p, gb)
        return tuple(linalg.matvec(to_basis, [nf.coefficient(m) for m in standard]))

    table: list[list[Vector | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            table[i][j] = table[j][i] = coords(polys[i] * polys[j])
    return QuotientAlgebra(
        gb=gb,
        standard=tuple(standard),
        basis=polys,
        mult_table=tuple(tuple(row) for row in table),
        to_basis=tuple(tuple(r) for r in to_basis),
        weights=weights,
        form=form,
    )


def quotient_algebra(
    gens: Sequence[Polynomial],
    *,
    order: MonomialOrder = DEGREVLEX,
    weights: Sequence[int] | None = None,
    basis: Sequence[Polynomial] | None = None,
    form: Polynomial | None = None,
) -> QuotientAlgebra:
    """Build the local algebra Q[x]/(gens) at the origin."""
    gens = [g for g in gens if g]
    if not gens:
        raise NotArtinianError("quotient not Artinian")
    if any(g.constant_term() for g in gens):
        raise NotLocalError("generators must vanish at the origin")
    gb = buchberger(gens, order)
    std = standard_monomials(gb)
    if len(std) < 2:
        raise AlgebraTooSmallError(f"quotient has dimension {len(std)} < 2")
    n = len(gb.variables)
    for i in range(n):
        x = Polynomial.variable(gb.variables, i)
        if normal_form(x ** len(std), gb):
            raise NotLocalError(f"{gb.variables[i]} is not nilpotent; the quotient is not local")
    if basis is None:
        basis = [Polynomial.monomial(gb.variables, m) for m in std]
    w = tuple(weights) if weights is not None else None
    return _build(gb, std, list(basis), w, form)


def milnor_algebra(Q: Polynomial, *, order: MonomialOrder = DEGREVLEX) -> QuotientAlgebra:
    """Quotient of Q[z] by the ideal of first partial derivatives of Q."""
    if Q.is_constant():
        raise ValueError("Q must be nonconstant")
    try:
        return quotient_algebra(gradient(Q), order=order, form=Q)
    except NotArtinianError:
        raise NotIsolatedSingularityError("not an isolated singularity") from None


def is_graded(A: QuotientAlgebra, weights: Sequence[int] | None = None) -> bool:
    w = weights if weights is not None else A.weights
    return all(g.is_homogeneous(w) for g in A.generators)


@dataclass(frozen=True)
class IdealFiltration:
    """``powers[k-1]`` spans the k-th power of the maximal ideal, k = 1..nil_index."""

    powers: tuple[tuple[Vector, ...], ...]
    nil_index: int

    def dims(self) -> list[int]:
        return [len(p) for p in self.powers]

    def power(self, k: int) -> tuple[Vector, ...]:
        if k < 1:
            raise ValueError("powers start at 1")
        return self.powers[k - 1] if k <= self.nil_index else ()


def _span(vectors: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    rows = [v for v in vectors if any(v)]
    if not rows:
        return ()
    r, piv = linalg.rref(rows)
    return tuple(tuple(row) for row in r[: len(piv)])


def ideal_filtration(A: QuotientAlgebra) -> IdealFiltration:
    m = A.maximal_ideal()
    powers = [_span(m)]
    while True:
        nxt = _span([A.multiply(u, b) for u in powers[-1] for b in m])
        if not nxt:
            break
        if len(nxt) >= len(powers[-1]):
            raise InconsistencyError("maximal ideal is not nilpotent")
        powers.append(nxt)
    return IdealFiltration(tuple(powers), len(powers))


def nil_index(A: QuotientAlgebra) -> int:
    return ideal_filtration(A).nil_index


def embedding_dimension(A: QuotientAlgebra) -> int:
    f = ideal_filtration(A)
    return len(f.power(1)) - len(f.power(2))


@dataclass(frozen=True)
class SocleData:
    """Annihilator of the maximal ideal.

    For Gorenstein algebras ``generator`` spans the socle, ``pivot`` is the
    basis index of the last nonzero entry of the generator, and ``omega`` is
    the linear form vanishing on 1 and every basis element except the pivot,
    with omega(generator) = 1.
    """

    basis: tuple[Vector, ...]
    generator: Vector | None
    pivot: int | None
    omega: Vector | None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_gorenstein(self) -> bool:
        return self.dim == 1

    def evaluate(self, v: Sequence[Fraction]) -> Fraction:
        if self.omega is None:
            raise NotGorensteinError("no linear form on a non-Gorenstein algebra")
        return sum((a * b for a, b in zip(self.omega, v)), Fraction(0))

    def scaled(self, c) -> "SocleData":
        """Same socle with omega multiplied by c (generator divided by c)."""
        c = Fraction(c)
        if not c:
            raise ValueError("scale must be nonzero")
        return replace(
            self,
            generator=tuple(x / c for x in self.generator),
            omega=tuple(x * c for x in self.omega),
        )


def socle_basis(A: QuotientAlgebra) -> tuple[Vector, ...]:
    n = A.dim
    # unknown x = sum_{i>=1} c_i b_i ; require x*b_j = 0 for j >= 1
    rows = []
    for j in range(1, n):
        for k in range(n):
            rows.append([A.mult_table[i][j][k] for i in range(1, n)])
    null = linalg.nullspace(rows, n - 1)
    return tuple((Fraction(0),) + tuple(v) for v in null)


def socle(A: QuotientAlgebra, generator: Polynomial | Sequence[Fraction] | str | None = None) -> SocleData:
    """Socle of A with a distinguished generator when it is one-dimensional.

    ``generator`` may be ``"hessian"`` (Milnor algebras only), ``"pivot"``
    (normalized to 1 at its last nonzero coordinate), a polynomial
    representative, or a coordinate vector.  The default is ``"hessian"``
    for Milnor algebras of forms and ``"pivot"`` otherwise.
    """
    basis = socle_basis(A)
    if len(basis) != 1:
        return SocleData(basis, None, None, None)
    if generator is None:
        generator = "hessian" if A.form is not None and A.form.is_homogeneous() else "pivot"
    if isinstance(generator, str):
        if generator == "pivot":
            v = basis[0]
            piv = max(i for i, c in enumerate(v) if c)
            v = tuple(c / v[piv] for c in v)
        elif generator == "hessian":
            if A.form is None:
                raise ValueError("Hessian generator needs a Milnor algebra")
            v = A.coords(hessian_det(A.form))
        else:
            raise ValueError(f"unknown socle generator {generator!r}")
    elif isinstance(generator, Polynomial):
        v = A.coords(generator)
    else:
        v = tuple(Fraction(c) for c in generator)
    if not any(v):
        raise InconsistencyError("socle generator is zero")
    if linalg.rank([basis[0], v]) != 1:
        raise ValueError("given element does not lie in the socle")
    piv = max(i for i, c in enumerate(v) if c)
    omega = tuple(Fraction(int(i == piv)) / v[piv] for i in range(A.dim))
    return SocleData(basis, v, piv, omega)


def is_gorenstein(A: QuotientAlgebra) -> bool:
    return len(socle_basis(A)) == 1


def hilbert_function(A: QuotientAlgebra, weights: Sequence[int] | None = None) -> list[int]:
    """Graded dimensions of A.

    For a (weighted) homogeneous ideal this is the census of standard
    monomials by (weighted) degree; otherwise the dimensions of the
    successive quotients of the maximal-ideal filtration.
    """
    w = weights if weights is not None else A.weights
    if is_graded(A, w):
        w = w or (1,) * len(A.variables)
        degs = [sum(a * b for a, b in zip(w, m)) for m in A.standard]
        out = [0] * (max(degs) + 1)
        for d in degs:
            out[d] += 1
        return out
    dims = [A.dim] + ideal_filtration(A).dims() + [0]
    return [dims[k] - dims[k + 1] for k in range(len(dims) - 1)]


def bilinear_form_gram(A: QuotientAlgebra, sd: SocleData) -> list[list[Fraction]]:
    """Gram matrix of (a, b) -> omega(ab) on the basis of A; checked nonsingular."""
    if not sd.is_gorenstein:
        raise NotGorensteinError("Gram matrix needs a Gorenstein algebra")
    n = A.dim
    gram = [[sd.evaluate(A.mult_table[i][j]) for j in range(n)] for i in range(n)]
    if linalg.det(gram) == 0:
        raise InconsistencyError("omega(ab) is degenerate on a Gorenstein algebra")
    return gram
