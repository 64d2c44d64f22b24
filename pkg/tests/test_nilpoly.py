from fractions import Fraction

import pytest

from gorenstein.invariants import associated_form
from gorenstein.local_algebra import (
    AlgebraTooSmallError,
    NotGorensteinError,
    milnor_algebra,
    quotient_algebra,
)
from gorenstein.nilpoly import (
    adapted_basis,
    component_form,
    derivative_span_dim,
    homogeneous_inverse_system,
    inverse_system_R,
    inverse_system_S,
    nil_polynomial,
    restrict,
    verify_annihilator,
)
from gorenstein.poly import Polynomial, apply_diff_operator, gradient, partial_derivative
from gorenstein.worked_examples import (
    a_algebra,
    a_generators,
    a_reference_R,
    a_reference_top_terms,
    cubic,
)

X = ("x1", "x2")


def top_terms(P, low=5):
    return {m: c for m, c in P.terms.items() if sum(m) >= low}


def test_truncated_polynomial_ring():
    (x1,) = Polynomial.gens(("x1",))
    npd = nil_polynomial(quotient_algebra([x1**3]))
    (y1,) = Polynomial.gens(("y1",))
    assert npd.P == Fraction(1, 2) * y1**2
    assert npd.nil_index == 2


@pytest.mark.parametrize("t", [1, 3, 5, 0, -4])
def test_example_family_top_terms_against_hand_values(t):
    # Hand expansion of omega((sum y_i e_i)^j)/j! for j = 5, 6, 7 with
    # omega(e14) = 1 gives exactly the negatives of the displayed reference
    # coefficients (the y1^2 y2^4 term, for example, is 15/6! = +1/48).
    A = a_algebra(t)
    P = nil_polynomial(A).P
    negated = {m: -c for m, c in a_reference_top_terms(t).items()}
    assert top_terms(P) == negated
    assert P.coefficient((2, 4) + (0,) * 11) == Fraction(1, 48)


@pytest.mark.parametrize("t", [1, 4])
def test_example_family_reference_sign_convention(t):
    P = nil_polynomial(a_algebra(t), omega_scale=-1).P
    assert top_terms(P) == a_reference_top_terms(t)


@pytest.mark.parametrize("t", [1, 0, -3])
def test_degree_of_P_is_nil_index(t):
    npd = nil_polynomial(a_algebra(t))
    assert npd.P.total_degree() == npd.nil_index
    assert min(npd.components) == 2


def test_low_degree_terms_vanish_on_variable_plane():
    # terms of degree <= 4 vanish when y3 = ... = y13 = 0
    P = nil_polynomial(a_algebra(3)).P
    for m in P.terms:
        if sum(m) <= 4:
            assert any(m[2:])


def test_reference_R_derivative():
    y1, y2 = Polynomial.gens(("y1", "y2"))
    expected = Fraction(7, 10080) * y2**6 - Fraction(4, 48) * y1**2 * y2**3 + Fraction(1, 48) * y1**4
    assert partial_derivative(a_reference_R(1), 1) == expected


@pytest.mark.parametrize("t", [1, 3, 5])
def test_reference_R_is_annihilated(t):
    R = a_reference_R(t)
    for g in a_generators(t):
        assert apply_diff_operator(g, R).is_zero()


@pytest.mark.parametrize("t", [1, 3, 5, 7, 0])
def test_inverse_system_R(t):
    A = a_algebra(t)
    R = inverse_system_R(nil_polynomial(A))
    assert R.g == -a_reference_R(t)
    report = verify_annihilator(R, a_generators(t), A)
    assert report.passed and report.span_dim == 15


def test_restriction_agrees_with_direct_composition():
    A = a_algebra(5)
    npd = nil_polynomial(A)
    L = [A.coords(x) for x in Polynomial.gens(X)]
    assert restrict(npd, L) == inverse_system_R(npd).g


def test_S_equals_R_for_embedding_presentation():
    A = a_algebra(3)
    assert inverse_system_S(A).g == inverse_system_R(nil_polynomial(A)).g


def test_S_for_redundant_presentation():
    x1, x2 = Polynomial.gens(X)
    gens = [x1 - x2**2, x2**4]
    S = inverse_system_S(gens)
    assert S.g.nvars == 2
    assert S.g.total_degree() == 3
    report = verify_annihilator(S, gens, S.algebra)
    assert report.passed and report.span_dim == 4


@pytest.mark.parametrize("c", [2, -3, Fraction(1, 5)])
def test_scale_covariance(c):
    A = a_algebra(3)
    base = nil_polynomial(A)
    scaled = nil_polynomial(A, omega_scale=c)
    assert scaled.P == c * base.P
    for s in range(2, base.nil_index + 1):
        assert component_form(scaled, s) == c * component_form(base, s)
    assert inverse_system_R(scaled).g == c * inverse_system_R(base).g


def test_component_form_top_degree():
    y1, y2 = Polynomial.gens(("y1", "y2"))
    assert component_form(nil_polynomial(a_algebra(1)), 7) == Fraction(-1, 10080) * y2**7
    assert component_form(nil_polynomial(a_algebra(0)), 6) == Fraction(1, 48) * y1**2 * y2**4


@pytest.mark.parametrize("t", [1, 0])
def test_component_forms_are_well_defined(t):
    npd = nil_polynomial(a_algebra(t))
    vectors, codims = adapted_basis(npd.algebra)
    assert codims[-1] == len(vectors) == 14
    for s in range(2, npd.nil_index + 1):
        form = component_form(npd, s)
        assert form.nvars == codims[npd.nil_index + 1 - s]


def test_other_complement_changes_P_by_linear_substitution():
    A = a_algebra(1)
    npd = nil_polynomial(A)
    # shift the first Pi vector by a multiple of a deeper vector
    pi = [list(v) for v in npd.pi_basis]
    pi[0][3] += 1
    other = nil_polynomial(A, pi_basis=pi)
    # both restrictions to the variable classes are inverse systems of the same ideal
    L = [A.coords(x) for x in Polynomial.gens(X)]
    assert restrict(other, L) == restrict(npd, L)
    assert other.P != npd.P


def test_homogeneous_inverse_system_of_fermat():
    A = milnor_algebra(cubic(0))
    g = homogeneous_inverse_system(A, socle_generator="pivot").g
    y1, y2, y3 = Polynomial.gens(("y1", "y2", "y3"))
    assert g == y1 * y2 * y3
    assert inverse_system_S(A, socle_generator="pivot").g == g


def test_graded_R_is_homogeneous_of_degree_nu():
    npd = nil_polynomial(milnor_algebra(cubic(2)))
    R = inverse_system_R(npd).g
    assert R.is_homogeneous() and R.total_degree() == 3


def test_verify_annihilator_failures():
    (x1,) = Polynomial.gens(("x1",))
    (y1,) = Polynomial.gens(("y1",))
    fail_i = verify_annihilator(y1**2, [x1**2], 2)
    assert not fail_i.generators_annihilate and not fail_i.passed
    fail_ii = verify_annihilator(y1**2, [x1**4], 4)
    assert fail_ii.generators_annihilate and not fail_ii.dimension_matches
    assert fail_ii.span_dim == 3
    ok = verify_annihilator(y1**2, [x1**3], 3)
    assert ok.passed


@pytest.mark.parametrize("t", [1, 2, 5])
def test_associated_form_is_inverse_system_of_milnor_algebra(t):
    Q = cubic(t)
    A = milnor_algebra(Q)
    report = verify_annihilator(associated_form(Q).form, gradient(Q), A)
    assert report.passed and report.span_dim == 8


def test_derivative_span_dims():
    y1, y2 = Polynomial.gens(("y1", "y2"))
    assert derivative_span_dim(y1 * y2) == 4
    assert derivative_span_dim(y1**3 + y2**3) == 6
    assert derivative_span_dim(Polynomial.zero(("y1",))) == 0


def test_refusals():
    x1, x2 = Polynomial.gens(X)
    with pytest.raises(NotGorensteinError):
        nil_polynomial(quotient_algebra([x1**2, x1 * x2, x2**2]))
    with pytest.raises(AlgebraTooSmallError):
        nil_polynomial(quotient_algebra([x1**2, x2]))
