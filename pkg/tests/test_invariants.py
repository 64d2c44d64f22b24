import random
from fractions import Fraction

import pytest
import sympy

from gorenstein import linalg
from gorenstein.invariants import (
    InvariantUndefinedError,
    UnsupportedCubicError,
    associated_form,
    binary_discriminant,
    evaluate_invariant,
    evaluate_invariant_at_associated,
    ternary_cubic_invariants,
)
from gorenstein.local_algebra import NotIsolatedSingularityError
from gorenstein.poly import Polynomial, linear_substitute, partial_derivative, proportionality_factor
from gorenstein.worked_examples import admissible_t_sample, cubic, cubic_reference_form, cubic_reference_j

Z = ("z1", "z2", "z3")
W = ("w1", "w2", "w3")


def monomial_matrix(rng):
    perm = list(range(3))
    rng.shuffle(perm)
    scales = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5)) for _ in range(3)]
    return [[scales[i] if j == perm[i] else Fraction(0) for j in range(3)] for i in range(3)]


@pytest.mark.parametrize("t", [1, 2, 5, -1, Fraction(7, 2)])
def test_mu_values(t):
    af = associated_form(cubic(t))
    third = -Fraction(t) / 3
    assert af.mu == {(3, 0, 0): third, (0, 3, 0): third, (0, 0, 3): third, (1, 1, 1): 1}
    assert af.form == cubic_reference_form(t)
    assert af.degree == 3


def test_fermat_associated_form():
    w1, w2, w3 = Polynomial.gens(W)
    assert associated_form(cubic(0)).form == 6 * w1 * w2 * w3


def test_hessian_normalization_is_proportional():
    for t in (1, 4, -2):
        a = associated_form(cubic(t)).form
        h = associated_form(cubic(t), "hessian").form
        c = proportionality_factor(h, a)
        assert c == 1 / Fraction(216 + 8 * t**3)


@pytest.mark.parametrize("t", [1, 2, -5, 9])
def test_duality(t):
    # the associated form of the associated form returns Q_t up to scale 6/t
    twice = associated_form(associated_form(cubic(t)).form).form
    assert twice == Fraction(6, t) * cubic(t).with_variables(W)


def test_binary_quartic():
    z1, z2 = Polynomial.gens(("z1", "z2"))
    af = associated_form(z1**4 + z2**4)
    w1, w2 = Polynomial.gens(("w1", "w2"))
    assert af.degree == 4
    assert af.form == 6 * w1**2 * w2**2


def test_rejects_non_isolated():
    with pytest.raises(NotIsolatedSingularityError):
        associated_form(cubic(-3))


@pytest.mark.parametrize("t", admissible_t_sample()[:20] + [0])
def test_j_closed_form(t):
    assert ternary_cubic_invariants(cubic(t)).j == cubic_reference_j(t)


def test_fermat_invariants():
    inv = ternary_cubic_invariants(cubic(0))
    assert inv.I4 == 0 and inv.j == 0 and inv.jbold is None


def test_triangle_invariants():
    z1, z2, z3 = Polynomial.gens(Z)
    inv = ternary_cubic_invariants(z1 * z2 * z3)
    assert (inv.a, inv.b, inv.c, inv.d) == (0, 0, 0, Fraction(1, 6))
    assert inv.I4 == Fraction(-1, 1296)
    assert inv.I6 == Fraction(-8, 46656)
    assert inv.Delta == inv.I6**2 + 64 * inv.I4**3 == 0


def test_unsupported_shape():
    z1, z2, z3 = Polynomial.gens(Z)
    with pytest.raises(UnsupportedCubicError, match="unsupported cubic shape"):
        ternary_cubic_invariants(cubic(1) + z1**2 * z2)
    with pytest.raises(ValueError):
        evaluate_invariant(cubic(1), "I4")


@pytest.mark.parametrize("t", [1, 2, 5, -1, -2, 7, -9])
def test_jbold_at_associated_form(t):
    assert evaluate_invariant_at_associated(cubic(t)) == cubic_reference_j(t)


@pytest.mark.parametrize("t", [0, 6, -3])
def test_jbold_undefined_at_excluded_values(t):
    with pytest.raises(InvariantUndefinedError):
        evaluate_invariant_at_associated(cubic(t))


def test_j_invariant_under_monomial_substitutions():
    rng = random.Random(7)
    for t in (1, 2, 5):
        Q = cubic(t)
        ref = evaluate_invariant(Q, "j")
        ref_bold = evaluate_invariant_at_associated(Q)
        for _ in range(4):
            QC = linear_substitute(Q, monomial_matrix(rng))
            assert evaluate_invariant(QC, "j") == ref
            assert evaluate_invariant_at_associated(QC) == ref_bold


def test_associated_form_covariance_general_matrix():
    # for Q_C(z) = Q(C^-1 z):  A(Q_C)(C^T w) = det(C)^2 A(Q)(w) with the Hessian normalization
    rng = random.Random(3)
    Q = cubic(2)
    F = associated_form(Q, "hessian").form
    for _ in range(3):
        while True:
            C = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            d = linalg.det(C)
            if d:
                break
        FC = associated_form(linear_substitute(Q, C), "hessian").form
        assert linear_substitute(FC, linalg.transpose(C)) == d**2 * F


def test_binary_discriminant_small_cases():
    z1, z2 = Polynomial.gens(("z1", "z2"))
    assert binary_discriminant(z1 * z2) != 0
    assert binary_discriminant(z1**2) == 0
    assert binary_discriminant(z1**4 + z2**4) == 4096


def test_binary_discriminant_matches_sympy_resultant():
    rng = random.Random(11)
    s = sympy.Symbol("s")

    def at_z2_equal_one(p):
        return sum((int(c) * s ** e[0] for e, c in p.terms.items()), sympy.Integer(0))

    checked = 0
    for m in (3, 4, 5, 4, 5):
        coeffs = [Fraction(rng.randint(1, 5))] + [Fraction(rng.randint(-5, 5)) for _ in range(m)]
        coeffs[1] = coeffs[1] or Fraction(1)
        Q = Polynomial(("z1", "z2"), {(m - i, i): c for i, c in enumerate(coeffs)})
        f, g = partial_derivative(Q, 0), partial_derivative(Q, 1)
        # both partials keep full degree in z1, so the Sylvester sizes agree
        ref = sympy.resultant(at_z2_equal_one(f), at_z2_equal_one(g), s)
        assert binary_discriminant(Q) == Fraction(int(ref))
        checked += 1
    assert checked == 5
