"""Associated forms of homogeneous isolated singularities and ternary cubic invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .local_algebra import (
    InconsistencyError,
    NotIsolatedSingularityError,
    QuotientAlgebra,
    ideal_filtration,
    milnor_algebra,
    socle,
)
from .nilpoly import coordinate_names
from .poly import (
    Monomial,
    Polynomial,
    hessian_det,
    monomials_of_degree,
    multinomial,
    partial_derivative,
)


class InvariantUndefinedError(ArithmeticError):
    """An absolute invariant has a vanishing denominator at the given form."""


class UnsupportedCubicError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AssociatedForm:
    source_Q: Polynomial
    mu: dict[Monomial, Fraction]
    form: Polynomial
    socle_generator: Polynomial

    @property
    def degree(self) -> int:
        return self.form.total_degree()


def _balanced_socle_monomial(A: QuotientAlgebra, nu: int) -> Polynomial:
    n = len(A.variables)
    candidates = sorted(monomials_of_degree(n, nu), key=lambda k: (max(k), tuple(-e for e in k)))
    for k in candidates:
        p = Polynomial.monomial(A.variables, k)
        if any(A.coords(p)):
            return p
    raise InconsistencyError(f"every monomial of degree {nu} vanishes in the Milnor algebra")


def associated_form(Q: Polynomial, socle_generator: str | Polynomial = "monomial") -> AssociatedForm:
    """Associated form sum_k mu_k * multinomial(nu; k) * w^k with nu = n(m-2).

    mu_k is defined by z^k = mu_k * v in the Milnor algebra.  The socle
    generator v is chosen by ``socle_generator``:

    * ``"monomial"``: the class of the most balanced degree-nu monomial that
      is nonzero (smallest largest exponent, ties broken lexicographically);
      z1*z2*z3 for ternary cubics.
    * ``"hessian"``: the class of the Hessian determinant of Q.
    * a polynomial whose class spans the socle.
    """
    n = Q.nvars
    m = Q.total_degree()
    if n < 2 or m < 3 or not Q.is_homogeneous():
        raise ValueError("associated forms need a form of degree >= 3 in >= 2 variables")
    A = milnor_algebra(Q)
    nu = n * (m - 2)
    if ideal_filtration(A).nil_index != nu:
        raise InconsistencyError(f"nil-index differs from n(m-2) = {nu}")
    if socle_generator == "monomial":
        v_poly = _balanced_socle_monomial(A, nu)
    elif socle_generator == "hessian":
        v_poly = hessian_det(Q)
    elif isinstance(socle_generator, Polynomial):
        v_poly = socle_generator
    else:
        raise ValueError(f"unknown socle generator {socle_generator!r}")
    sd = socle(A, v_poly)
    if not sd.is_gorenstein:
        raise InconsistencyError("Milnor algebra of an isolated singularity must be Gorenstein")
    v = sd.generator
    piv = sd.pivot
    mu: dict[Monomial, Fraction] = {}
    terms: dict[Monomial, Fraction] = {}
    for k in monomials_of_degree(n, nu):
        c = A.coords(Polynomial.monomial(Q.variables, k))
        val = c[piv] / v[piv]
        if any(x != val * y for x, y in zip(c, v)):
            raise InconsistencyError(f"z^{k} does not lie in the socle")
        if val:
            mu[k] = val
            terms[k] = val * multinomial(k)
    return AssociatedForm(Q, mu, Polynomial(coordinate_names(n, "w"), terms), v_poly)


@dataclass(frozen=True)
class TernaryCubicInvariants:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    I4: Fraction
    I6: Fraction
    Delta: Fraction

    @property
    def j(self) -> Fraction | None:
        """64*I4^3/Delta, or None when Delta = 0."""
        if not self.Delta:
            return None
        return 64 * self.I4**3 / self.Delta

    @property
    def jbold(self) -> Fraction | None:
        """1/j, or None when j is undefined or zero."""
        j = self.j
        if not j:
            return None
        return 1 / j


def hesse_coefficients(Q: Polynomial) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(a, b, c, d) with Q = a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3."""
    if Q.nvars != 3:
        raise UnsupportedCubicError("unsupported cubic shape: need three variables")
    allowed = {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}
    if Q and (Q.total_degree() != 3 or not Q.is_homogeneous()) or set(Q.terms) - allowed:
        raise UnsupportedCubicError(
            "unsupported cubic shape: expected a*z1^3 + b*z2^3 + c*z3^3 + 6*d*z1*z2*z3"
        )
    return (
        Q.coefficient((3, 0, 0)),
        Q.coefficient((0, 3, 0)),
        Q.coefficient((0, 0, 3)),
        Q.coefficient((1, 1, 1)) / 6,
    )


def ternary_cubic_invariants(Q: Polynomial) -> TernaryCubicInvariants:
    a, b, c, d = hesse_coefficients(Q)
    I4 = a * b * c * d - d**4
    I6 = a**2 * b**2 * c**2 - 20 * a * b * c * d**3 - 8 * d**6
    return TernaryCubicInvariants(a, b, c, d, I4, I6, I6**2 + 64 * I4**3)


ABSOLUTE_INVARIANTS = ("j", "jbold")


def evaluate_invariant(Q: Polynomial, name: str) -> Fraction:
    if name not in ABSOLUTE_INVARIANTS:
        raise ValueError(f"unknown absolute invariant {name!r}; choose from {ABSOLUTE_INVARIANTS}")
    inv = ternary_cubic_invariants(Q)
    if name == "j":
        if inv.j is None:
            raise InvariantUndefinedError("j undefined: Delta = 0")
        return inv.j
    if inv.jbold is None:
        reason = "Delta = 0" if not inv.Delta else "I4 = 0"
        raise InvariantUndefinedError(f"jbold = 1/j undefined: {reason}")
    return inv.jbold


def evaluate_invariant_at_associated(Q: Polynomial, name: str = "jbold") -> Fraction:
    """Evaluate an absolute invariant at the associated form of Q."""
    try:
        af = associated_form(Q)
    except NotIsolatedSingularityError as exc:
        raise InvariantUndefinedError(f"{name} undefined: Q is not an isolated singularity") from exc
    return evaluate_invariant(af.form, name)


def binary_discriminant(Q: Polynomial) -> Fraction:
    """Resultant of the two partial derivatives of a binary form (Sylvester determinant)."""
    if Q.nvars != 2 or not Q.is_homogeneous() or Q.total_degree() < 2:
        raise ValueError("need a binary form of degree >= 2")
    m = Q.total_degree()
    f, g = partial_derivative(Q, 0), partial_derivative(Q, 1)
    deg = m - 1
    fc = [f.coefficient((deg - i, i)) for i in range(deg + 1)]
    gc = [g.coefficient((deg - i, i)) for i in range(deg + 1)]
    return linalg.det(sylvester_matrix(fc, gc))


def sylvester_matrix(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[list[Fraction]]:
    """Sylvester matrix of two coefficient lists (highest power first)."""
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    rows = [[Fraction(0)] * s + list(map(Fraction, p)) + [Fraction(0)] * (size - s - dp - 1) for s in range(dq)]
    rows += [[Fraction(0)] * s + list(map(Fraction, q)) + [Fraction(0)] * (size - s - dq - 1) for s in range(dp)]
    return rows
