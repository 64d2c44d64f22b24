"""Exact computations with Artinian Gorenstein algebras: Groebner bases, Milnor
algebras, nil-polynomials, inverse systems and associated forms over Q."""

__version__ = "0.1.0"

from .groebner import (
    DEGREVLEX,
    GroebnerBasis,
    MonomialOrder,
    NotArtinianError,
    buchberger,
    is_artinian,
    normal_form,
    standard_monomials,
)
from .invariants import (
    ABSOLUTE_INVARIANTS,
    AssociatedForm,
    InvariantUndefinedError,
    TernaryCubicInvariants,
    UnsupportedCubicError,
    associated_form,
    binary_discriminant,
    evaluate_invariant,
    evaluate_invariant_at_associated,
    ternary_cubic_invariants,
)
from .local_algebra import (
    AlgebraTooSmallError,
    IdealFiltration,
    InconsistencyError,
    NotGorensteinError,
    NotIsolatedSingularityError,
    NotLocalError,
    QuotientAlgebra,
    SocleData,
    bilinear_form_gram,
    embedding_dimension,
    hilbert_function,
    ideal_filtration,
    is_gorenstein,
    milnor_algebra,
    nil_index,
    quotient_algebra,
    socle,
    socle_basis,
)
from .nilpoly import (
    AnnihilatorReport,
    InverseSystem,
    NilPolynomialData,
    component_form,
    homogeneous_inverse_system,
    inverse_system_R,
    inverse_system_S,
    nil_polynomial,
    verify_annihilator,
)
from .parsing import ParseError, PolynomialSource, parse_polynomial
from .poly import (
    Polynomial,
    apply_diff_operator,
    gradient,
    hessian_det,
    hessian_matrix,
    linear_substitute,
    partial_derivative,
)
