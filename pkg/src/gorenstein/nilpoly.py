"""Nil-polynomials of Gorenstein algebras and the inverse systems they induce.

For a Gorenstein algebra A with maximal ideal m, a hyperplane Pi in m
complementary to the socle, and a linear form omega with kernel <Pi, 1>,
the nil-polynomial is

    P(x) = omega(sum_{s=2}^{nu} x^s / s!),   x in Pi,

written in coordinates y1, y2, ... dual to a basis of Pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Sequence

from . import linalg
from .linalg import EchelonBasis
from .local_algebra import (
    AlgebraTooSmallError,
    InconsistencyError,
    NotGorensteinError,
    QuotientAlgebra,
    SocleData,
    Vector,
    ideal_filtration,
    quotient_algebra,
    socle,
)
from .poly import Polynomial, apply_diff_operator, partial_derivative

Element = list[Polynomial]


def coordinate_names(n: int, prefix: str = "y") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _generic_element(A: QuotientAlgebra, vectors: Sequence[Vector], ring: tuple[str, ...]) -> Element:
    ys = Polynomial.gens(ring)
    out = [Polynomial.zero(ring) for _ in range(A.dim)]
    for y, v in zip(ys, vectors):
        for k, c in enumerate(v):
            if c:
                out[k] = out[k] + y.scale(c)
    return out


def _multiply(A: QuotientAlgebra, u: Element, v: Element) -> Element:
    ring = u[0].variables
    out = [Polynomial.zero(ring) for _ in range(A.dim)]
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = A.mult_table[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            entries = [(k, c) for k, c in enumerate(row[j]) if c]
            if not entries:
                continue
            prod = ui * vj
            for k, c in entries:
                out[k] = out[k] + prod.scale(c)
    return out


def exp_components(
    A: QuotientAlgebra, omega: Sequence[Fraction], vectors: Sequence[Vector], top: int, ring: tuple[str, ...]
) -> dict[int, Polynomial]:
    """omega(x^j)/j! for j = 0..top, with x = sum_i ring[i] * vectors[i]."""
    x = _generic_element(A, vectors, ring)
    power = [Polynomial.constant(ring, int(k == 0)) for k in range(A.dim)]
    out = {}
    for j in range(top + 1):
        if j:
            power = _multiply(A, power, x)
        val = Polynomial.zero(ring)
        for w, p in zip(omega, power):
            if w and p:
                val = val + p.scale(w)
        out[j] = val.scale(Fraction(1, factorial(j)))
    return out


def _omega_for(A: QuotientAlgebra, pi_basis: Sequence[Vector], generator: Vector, scale: Fraction) -> Vector:
    rows = [A.unit(), *pi_basis, generator]
    if linalg.rank(rows) != A.dim:
        raise ValueError("Pi together with 1 and the socle generator must span the algebra")
    rhs = [Fraction(0)] * (A.dim - 1) + [scale]
    # omega . row = rhs  for each row
    return tuple(linalg.solve(rows, rhs))


@dataclass(frozen=True, eq=False)
class NilPolynomialData:
    algebra: QuotientAlgebra
    socle: SocleData
    pi_basis: tuple[Vector, ...]
    omega: Vector
    nil_index: int
    P: Polynomial
    components: dict[int, Polynomial]

    @property
    def variables(self) -> tuple[str, ...]:
        return self.P.variables

    @cached_property
    def filtration_basis(self) -> tuple[list[Vector], list[int]]:
        """Basis of m adapted to its powers, and dim of m/m^k for k = 1..nu+1."""
        return adapted_basis(self.algebra)

    @cached_property
    def full_components(self) -> dict[int, Polynomial]:
        """Homogeneous components of omega∘exp on all of m in adapted coordinates."""
        vectors, _ = self.filtration_basis
        ring = coordinate_names(len(vectors), "u")
        return exp_components(self.algebra, self.omega, vectors, self.nil_index, ring)


def nil_polynomial(
    A: QuotientAlgebra,
    *,
    socle_generator=None,
    omega_scale=1,
    pi_basis: Sequence[Sequence[Fraction]] | None = None,
) -> NilPolynomialData:
    """Nil-polynomial of a Gorenstein algebra of dimension > 2.

    By default Pi is spanned by every basis element of A other than 1 and the
    socle pivot, and omega vanishes on those elements.  ``omega_scale``
    multiplies omega; ``pi_basis`` supplies another hyperplane.
    """
    if A.dim <= 2:
        raise AlgebraTooSmallError("nil-polynomials need an algebra of dimension > 2")
    sd = socle(A, socle_generator)
    if not sd.is_gorenstein:
        raise NotGorensteinError(f"socle has dimension {sd.dim}; the algebra is not Gorenstein")
    if pi_basis is None:
        pi = tuple(
            tuple(Fraction(int(i == j)) for i in range(A.dim))
            for j in range(1, A.dim)
            if j != sd.pivot
        )
    else:
        pi = tuple(tuple(Fraction(c) for c in v) for v in pi_basis)
        if len(pi) != A.dim - 2:
            raise ValueError(f"Pi must have dimension {A.dim - 2}")
        if any(v[0] for v in pi):
            raise ValueError("Pi must lie in the maximal ideal")
    omega = _omega_for(A, pi, sd.generator, Fraction(omega_scale))
    nu = ideal_filtration(A).nil_index
    ring = coordinate_names(len(pi))
    comps = exp_components(A, omega, pi, nu, ring)
    if comps[0] or comps[1]:
        raise InconsistencyError("omega does not vanish on <Pi, 1>")
    components = {s: comps[s] for s in range(2, nu + 1)}
    P = Polynomial.zero(ring)
    for c in components.values():
        P = P + c
    return NilPolynomialData(A, sd, pi, omega, nu, P, components)


def adapted_basis(A: QuotientAlgebra) -> tuple[list[Vector], list[int]]:
    """Basis f_1.. of m whose tails span the powers m^k.

    Complements are picked greedily, preferring the algebra's own basis
    vectors, so for monomial bases the result is a reordering of them.
    Returns the vectors and codims[k-1] = dim m/m^k for k = 1..nu+1.
    """
    filt = ideal_filtration(A)
    nu = filt.nil_index
    chosen: list[Vector] = []
    codims = [0]
    units = A.maximal_ideal()
    for k in range(1, nu + 1):
        here = filt.power(k)
        deeper = list(filt.power(k + 1))
        span_here = EchelonBasis()
        for v in here:
            span_here.add(dict(enumerate(v)))
        acc = EchelonBasis()
        for v in deeper:
            acc.add(dict(enumerate(v)))
        for cand in [u for u in units if span_here.contains(dict(enumerate(u)))] + list(here):
            if acc.add(dict(enumerate(cand))):
                chosen.append(cand)
        codims.append(len(chosen))
    return chosen, codims


def component_form(npd: NilPolynomialData, s: int) -> Polynomial:
    """The form induced by the degree-s component on m/m^(nu+2-s).

    Coordinates y1.. are dual to the leading vectors of the adapted basis.
    Raises if the component depends on coordinates dual to m^(nu+2-s).
    """
    nu = npd.nil_index
    if not 2 <= s <= nu:
        raise ValueError(f"component degree must lie in 2..{nu}")
    _, codims = npd.filtration_basis
    keep = codims[nu + 1 - s]  # dim m/m^(nu+2-s)
    raw = npd.full_components[s]
    out = {}
    for m, c in raw.terms.items():
        if any(m[keep:]):
            raise InconsistencyError(
                f"degree-{s} component depends on m^{nu + 2 - s}; the induced form is ill-defined"
            )
        out[m[:keep]] = c
    return Polynomial(coordinate_names(keep), out)


def restrict(npd: NilPolynomialData, vectors: Sequence[Vector]) -> Polynomial:
    """P restricted to span(vectors) ⊂ Pi, in coordinates y1.. on that span."""
    pi = list(npd.pi_basis)
    ring = coordinate_names(len(vectors))
    ys = Polynomial.gens(ring)
    # coordinates of each vector in the Pi basis
    mat = linalg.transpose(pi)
    images = [Polynomial.zero(ring) for _ in pi]
    for i, v in enumerate(vectors):
        aug = [list(row) + [c] for row, c in zip(mat, v)]
        rr, pv = linalg.rref(aug)
        if len(pi) in pv:
            raise ValueError("vector does not lie in Pi")
        for row, pc in zip(rr, pv):
            if row[-1]:
                images[pc] = images[pc] + ys[i].scale(row[-1])
    return npd.P.compose(images)


@dataclass(frozen=True, eq=False)
class InverseSystem:
    g: Polynomial
    source: str
    algebra: QuotientAlgebra


def _variable_classes(A: QuotientAlgebra) -> list[Vector]:
    return [A.coords(x) for x in Polynomial.gens(A.variables)]


def inverse_system_R(npd: NilPolynomialData) -> InverseSystem:
    """Restriction of the nil-polynomial to L = span of the variable classes."""
    A = npd.algebra
    L = _variable_classes(A)
    filt = ideal_filtration(A)
    k = len(filt.power(1)) - len(filt.power(2))
    if len(L) != k:
        raise ValueError(
            f"{len(L)} variable classes cannot form a basis of m/m^2 of dimension {k}"
        )
    acc = EchelonBasis()
    for v in filt.power(2):
        acc.add(dict(enumerate(v)))
    for v in L:
        if not acc.add(dict(enumerate(v))):
            raise ValueError("variable classes fail to span m/m^2")
    om = npd.omega
    if any(sum((a * b for a, b in zip(om, v)), Fraction(0)) for v in L):
        raise ValueError("variable classes do not lie in Pi")
    ring = coordinate_names(k)
    comps = exp_components(A, om, L, npd.nil_index, ring)
    g = Polynomial.zero(ring)
    for c in comps.values():
        g = g + c
    return InverseSystem(g, "restriction", A)


def inverse_system_S(source, *, socle_generator=None, omega_scale=1) -> InverseSystem:
    """Inverse system sum_j omega((sum_i y_i e_i)^j)/j! with e_i the variable classes.

    ``source`` is a QuotientAlgebra or a list of ideal generators.  Works for
    any presentation, including ones with more variables than the
    embedding dimension.
    """
    A = source if isinstance(source, QuotientAlgebra) else quotient_algebra(source)
    sd = socle(A, socle_generator)
    if not sd.is_gorenstein:
        raise NotGorensteinError(f"socle has dimension {sd.dim}; the algebra is not Gorenstein")
    sd = sd.scaled(omega_scale) if omega_scale != 1 else sd
    nu = ideal_filtration(A).nil_index
    E = _variable_classes(A)
    ring = coordinate_names(len(E))
    comps = exp_components(A, sd.omega, E, nu, ring)
    g = Polynomial.zero(ring)
    for c in comps.values():
        g = g + c
    return InverseSystem(g, "generalized", A)


def homogeneous_inverse_system(A: QuotientAlgebra, *, socle_generator=None) -> InverseSystem:
    """omega((sum y_i e_i)^nu)/nu! for standard graded presentations."""
    if not all(g.is_homogeneous() for g in A.generators):
        raise ValueError("homogeneous inverse systems need a homogeneous ideal")
    sd = socle(A, socle_generator)
    if not sd.is_gorenstein:
        raise NotGorensteinError("not Gorenstein")
    nu = ideal_filtration(A).nil_index
    E = _variable_classes(A)
    ring = coordinate_names(len(E))
    g = exp_components(A, sd.omega, E, nu, ring)[nu]
    return InverseSystem(g, "homogeneous", A)


def derivative_span_dim(g: Polynomial) -> int:
    """Dimension of the span of g and all its iterated partial derivatives."""
    if not g:
        return 0
    span = EchelonBasis()
    span.add(dict(g.terms))
    queue = [g]
    while queue:
        nxt = []
        for h in queue:
            for i in range(h.nvars):
                d = partial_derivative(h, i)
                if d and span.add(dict(d.terms)):
                    nxt.append(d)
        queue = nxt
    return len(span)


@dataclass(frozen=True)
class AnnihilatorReport:
    annihilates: tuple[bool, ...]
    span_dim: int
    expected_dim: int

    @property
    def generators_annihilate(self) -> bool:
        return all(self.annihilates)

    @property
    def dimension_matches(self) -> bool:
        return self.span_dim == self.expected_dim

    @property
    def passed(self) -> bool:
        return self.generators_annihilate and self.dimension_matches


def verify_annihilator(
    g: InverseSystem | Polynomial, gens: Sequence[Polynomial], A: QuotientAlgebra | int
) -> AnnihilatorReport:
    """Certify Ann(g) = I.

    Every generator must kill g (I ⊆ Ann(g)), and the derivative span of g
    must have dimension dim A = dim Q[x]/I, forcing equality.
    """
    poly = g.g if isinstance(g, InverseSystem) else g
    kills = tuple(not apply_diff_operator(f, poly) for f in gens)
    expected = A if isinstance(A, int) else A.dim
    return AnnihilatorReport(kills, derivative_span_dim(poly), expected)
