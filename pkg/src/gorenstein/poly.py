"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in an ambient ring given by an ordered tuple of variable
names.  Terms are stored as a mapping from exponent tuples to ``Fraction``
coefficients; zero coefficients are never stored.

    x1^2*x2 + 3   ->   {(2, 1): Fraction(1), (0, 0): Fraction(3)}

Values are immutable.  Every operation returns a new polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class AmbientMismatchError(ValueError):
    """Raised when two polynomials from different rings are combined."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def grlex_key(mono: Monomial) -> tuple:
    """Sort key for graded lexicographic order (x1 > x2 > ...)."""
    return (sum(mono), mono)


class Polynomial:
    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Scalar] | None = None):
        variables = tuple(variables)
        n = len(variables)
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise AmbientMismatchError(f"monomial {mono} does not fit ring {variables}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.variables = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> "Polynomial":
        variables = tuple(variables)
        c = _as_fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, variables: Sequence[str], which: int | str) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(which) if isinstance(which, str) else which
        if not 0 <= i < len(variables):
            raise IndexError(f"variable index {i} out of range for {variables}")
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], mono: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls(variables, {tuple(mono): c})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["Polynomial"]:
        return [cls.variable(variables, i) for i in range(len(variables))]

    # accessors

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((_wdeg(m, weights) for m in self._terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            weights = (1,) * self.nvars
        return len({_wdeg(m, weights) for m in self._terms}) <= 1

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise AmbientMismatchError(f"ring {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(self.variables, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.variables, {m: c for m, c in out.items() if c})

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, c: Scalar = 1) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(
            self.variables,
            {tuple(a + b for a, b in zip(m, mono)): c * v for m, v in self._terms.items()},
        )

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == ({} if other == 0 else {(0,) * self.nvars: Fraction(other)})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # substitution

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        values = [_as_fraction(v) for v in values]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= v**e
            total += term
        return total

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for the i-th variable.

        The images share one ambient ring, which becomes the ring of the result.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return self
        target = images[0].variables
        for q in images:
            if q.variables != target:
                raise AmbientMismatchError("images must share a ring")
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        result = Polynomial.zero(target)
        for m, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Same terms, positionally renamed variables."""
        variables = tuple(variables)
        if len(variables) != self.nvars:
            raise AmbientMismatchError("renaming must keep the number of variables")
        return Polynomial._raw(variables, dict(self._terms))

    def embed(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express in a larger ring containing every variable of this one by name."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        out = {}
        for m, c in self._terms.items():
            e = [0] * len(variables)
            for j, k in zip(idx, m):
                e[j] = k
            out[tuple(e)] = c
        return Polynomial._raw(variables, out)

    # printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e
            ]
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, vars={list(self.variables)})"


def _wdeg(mono: Monomial, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, mono))


def partial_derivative(p: Polynomial, var_index: int) -> Polynomial:
    if not 0 <= var_index < p.nvars:
        raise IndexError(f"variable index {var_index} out of range")
    out = {}
    for m, c in p.terms.items():
        e = m[var_index]
        if e:
            dm = m[:var_index] + (e - 1,) + m[var_index + 1 :]
            out[dm] = c * e
    return Polynomial._raw(p.variables, out)


def gradient(p: Polynomial) -> list[Polynomial]:
    return [partial_derivative(p, i) for i in range(p.nvars)]


def hessian_matrix(p: Polynomial) -> list[list[Polynomial]]:
    first = gradient(p)
    return [[partial_derivative(first[i], j) for j in range(p.nvars)] for i in range(p.nvars)]


def polynomial_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along rows, memoized on column sets."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].variables
    memo: dict[tuple[int, int], Polynomial] = {}

    def minor(row: int, cols: int) -> Polynomial:
        # determinant of rows row..n-1 restricted to the column bitmask cols
        if row == n:
            return Polynomial.constant(variables, 1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Polynomial.zero(variables)
        sign = 1
        for j in range(n):
            if cols & (1 << j):
                entry = matrix[row][j]
                if entry:
                    sub = minor(row + 1, cols & ~(1 << j))
                    total = total + (entry * sub if sign > 0 else -(entry * sub))
                sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def hessian_det(p: Polynomial) -> Polynomial:
    if p.nvars < 1:
        raise ValueError("Hessian needs at least one variable")
    return polynomial_det(hessian_matrix(p))


def apply_diff_operator(f: Polynomial, g: Polynomial) -> Polynomial:
    """Apply f(d/dy_1, ..., d/dy_k) to g (apolarity action).

    Variables are matched by position, so ``f`` may live in x-variables and
    ``g`` in y-variables.  The result lives in the ring of ``g``.
    """
    if f.nvars != g.nvars:
        raise AmbientMismatchError("operator and operand need the same number of variables")
    out: dict[Monomial, Fraction] = {}
    for a, fa in f.terms.items():
        for b, gb in g.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                k = 1
                for x, y in zip(a, b):
                    k *= _falling(y, x)
                m = tuple(y - x for x, y in zip(a, b))
                out[m] = out.get(m, 0) + fa * gb * k
    return Polynomial._raw(g.variables, {m: c for m, c in out.items() if c})


@lru_cache(maxsize=None)
def _falling(n: int, k: int) -> int:
    r = 1
    for i in range(k):
        r *= n - i
    return r


def linear_substitute(p: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """Return p_C with p_C(w) = p(C^{-1} w)."""
    from .linalg import SingularMatrixError, inverse

    n = p.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"need a {n}x{n} matrix")
    try:
        cinv = inverse(matrix)
    except SingularMatrixError:
        raise SingularMatrixError("linear substitution matrix is singular") from None
    gens = Polynomial.gens(p.variables)
    images = []
    for i in range(n):
        img = Polynomial.zero(p.variables)
        for j in range(n):
            if cinv[i][j]:
                img = img + gens[j].scale(cinv[i][j])
        images.append(img)
    return p.compose(images)


def homogeneous_component(p: Polynomial, degree: int, weights: Sequence[int] | None = None) -> Polynomial:
    if weights is None:
        return Polynomial._raw(p.variables, {m: c for m, c in p.terms.items() if sum(m) == degree})
    return Polynomial._raw(
        p.variables, {m: c for m, c in p.terms.items() if _wdeg(m, weights) == degree}
    )


def homogeneous_components(p: Polynomial) -> dict[int, Polynomial]:
    buckets: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        buckets.setdefault(sum(m), {})[m] = c
    return {d: Polynomial._raw(p.variables, t) for d, t in sorted(buckets.items())}


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    """All exponent tuples of the given total degree, in descending lex order."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def multinomial(ks: Sequence[int]) -> int:
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def proportionality_factor(p: Polynomial, q: Polynomial) -> Fraction | None:
    """Return c with p == c*q, or None if the two are not proportional.

    Both must be nonzero.  Every matched coefficient ratio has to agree exactly.
    """
    if p.variables != q.variables:
        raise AmbientMismatchError("proportionality needs a shared ring")
    if not p or not q or set(p.terms) != set(q.terms):
        return None
    ratios = {p.coefficient(m) / c for m, c in q.terms.items()}
    return ratios.pop() if len(ratios) == 1 else None
