import itertools
from fractions import Fraction

import pytest

from gorenstein import linalg
from gorenstein.local_algebra import (
    AlgebraTooSmallError,
    NotGorensteinError,
    NotIsolatedSingularityError,
    NotLocalError,
    bilinear_form_gram,
    embedding_dimension,
    hilbert_function,
    ideal_filtration,
    is_gorenstein,
    milnor_algebra,
    nil_index,
    quotient_algebra,
    socle,
)
from gorenstein.poly import Polynomial, hessian_det
from gorenstein.worked_examples import A_WEIGHTS, a_algebra, a_generators, cubic

X = ("x1", "x2")
Z = ("z1", "z2", "z3")


def binary(*terms):
    z1, z2 = Polynomial.gens(("z1", "z2"))
    return sum((c * z1**a * z2**b for c, a, b in terms), Polynomial.zero(("z1", "z2")))


# homogeneous fixtures (n, m) with isolated singularities
FORMS = {
    "fermat 3,3": cubic(0),
    "Q_1": cubic(1),
    "Q_5": cubic(5),
    "binary cubic": binary((1, 3, 0), (1, 0, 3)),
    "binary cubic 2": binary((1, 3, 0), (-1, 1, 2), (2, 0, 3)),
    "binary quartic": binary((1, 4, 0), (1, 0, 4)),
    "binary quartic 2": binary((1, 4, 0), (3, 2, 2), (1, 0, 4)),
    "ternary quartic": sum((z**4 for z in Polynomial.gens(Z)), Polynomial.zero(Z))
    + Polynomial.monomial(Z, (2, 1, 1)),
}


def _check_table(A):
    n = A.dim
    for i, j in itertools.product(range(n), repeat=2):
        assert A.mult_table[i][j] == A.mult_table[j][i]
    for i, j, k in itertools.product(range(1, n), repeat=3):
        e = lambda a: tuple(Fraction(int(x == a)) for x in range(n))
        lhs = A.multiply(A.multiply(e(i), e(j)), e(k))
        rhs = A.multiply(e(i), A.multiply(e(j), e(k)))
        assert lhs == rhs


def test_fermat_milnor_algebra():
    A = milnor_algebra(cubic(0))
    assert A.dim == 8
    assert nil_index(A) == 3
    assert hilbert_function(A) == [1, 3, 3, 1]
    assert embedding_dimension(A) == 3
    sd = socle(A, "pivot")
    z1, z2, z3 = Polynomial.gens(Z)
    assert A.element(sd.generator) == z1 * z2 * z3


def test_cubic_q1():
    A = milnor_algebra(cubic(1))
    assert A.dim == 8 and embedding_dimension(A) == 3
    _check_table(A)


def test_non_isolated_cubic_rejected():
    with pytest.raises(NotIsolatedSingularityError, match="not an isolated singularity"):
        milnor_algebra(cubic(-3))


@pytest.mark.parametrize("t", [0, 1, 3, 4, 5, -1, -3, -4])
def test_example_family_structure(t):
    A = a_algebra(t)
    assert A.dim == 15
    assert is_gorenstein(A)
    assert nil_index(A) == (7 if t else 6)
    sd = socle(A)
    assert sd.pivot == 14
    assert sd.generator == tuple(Fraction(int(i == 14)) for i in range(15))


def test_example_family_table_is_associative():
    _check_table(a_algebra(3))


def test_example_family_hilbert_functions():
    A = a_algebra(1)
    assert hilbert_function(A, A_WEIGHTS) == [1, 0, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 0, 1]
    filt = ideal_filtration(A)
    assert filt.dims()[0] == 14
    assert filt.dims()[0] - filt.dims()[1] == embedding_dimension(A) == 2
    assert len(filt.power(nil_index(A))) == 1


def test_one_variable_quotients():
    (x1,) = Polynomial.gens(("x1",))
    A = quotient_algebra([x1**2])
    assert A.dim == 2 and [str(b) for b in A.basis] == ["1", "x1"]
    assert hilbert_function(quotient_algebra([x1**3])) == [1, 1, 1]


def test_non_gorenstein_triple_point():
    x1, x2 = Polynomial.gens(X)
    B = quotient_algebra([x1**2, x1 * x2, x2**2])
    sd = socle(B)
    assert sd.dim == 2 and not sd.is_gorenstein
    with pytest.raises(NotGorensteinError):
        bilinear_form_gram(B, sd)


def test_rejections():
    x1, x2 = Polynomial.gens(X)
    with pytest.raises(NotLocalError):
        quotient_algebra([x1**2 - 1, x2**2])
    with pytest.raises(NotLocalError):
        quotient_algebra([x1**2 - x1, x2**2])
    with pytest.raises(AlgebraTooSmallError):
        quotient_algebra([x1, x2])


@pytest.mark.parametrize("name", sorted(FORMS))
def test_homogeneous_fixtures(name):
    Q = FORMS[name]
    n, m = Q.nvars, Q.total_degree()
    A = milnor_algebra(Q)
    assert A.dim == (m - 1) ** n
    nu = nil_index(A)
    assert nu == n * (m - 2)
    top = ideal_filtration(A).power(nu)
    assert len(top) == 1
    hess = A.coords(hessian_det(Q))
    assert any(hess)
    assert linalg.rank([top[0], hess]) == 1
    hf = hilbert_function(A)
    assert hf == hf[::-1]


GORENSTEIN_FIXTURES = [
    ("A_1", lambda: a_algebra(1)),
    ("A_0", lambda: a_algebra(0)),
    ("A_-4", lambda: a_algebra(-4)),
    ("fermat", lambda: milnor_algebra(cubic(0))),
    ("Q_2", lambda: milnor_algebra(cubic(2))),
    ("binary quartic", lambda: milnor_algebra(FORMS["binary quartic 2"])),
    ("x^5", lambda: quotient_algebra([Polynomial.gens(("x1",))[0] ** 5])),
]


@pytest.mark.parametrize("name,build", GORENSTEIN_FIXTURES, ids=[f[0] for f in GORENSTEIN_FIXTURES])
def test_gram_matrix_nonsingular(name, build):
    A = build()
    sd = socle(A)
    gram = bilinear_form_gram(A, sd)
    assert linalg.det(gram) != 0
    assert all(gram[i][j] == gram[j][i] for i in range(A.dim) for j in range(A.dim))


def test_reference_basis_and_standard_basis_agree_on_structure():
    t = 5
    A = a_algebra(t)
    B = quotient_algebra(a_generators(t), weights=A_WEIGHTS)
    assert nil_index(A) == nil_index(B)
    assert ideal_filtration(A).dims() == ideal_filtration(B).dims()
    assert socle(A).dim == socle(B).dim == 1


def test_with_basis_validation():
    A = quotient_algebra(a_generators(1))
    x1, x2 = Polynomial.gens(X)
    basis = list(A.basis)
    with pytest.raises(ValueError):
        A.with_basis([x1] + basis[1:])
    with pytest.raises(ValueError):
        A.with_basis(basis[:1] + [basis[1]] * (A.dim - 1))
