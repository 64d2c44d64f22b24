"""Buchberger's algorithm, reduced Groebner bases and normal forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .poly import AmbientMismatchError, Monomial, Polynomial


class NotArtinianError(ValueError):
    """The quotient ring is infinite-dimensional."""


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``priority`` lists variable indices from most to least significant;
    ``weights`` (graded orders only) replaces total degree by a weighted degree.
    """

    kind: str = "degrevlex"
    priority: tuple[int, ...] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "deglex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.weights is not None:
            if self.kind == "lex":
                raise ValueError("weights only apply to graded orders")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive")

    def key(self, mono: Monomial) -> tuple:
        """Sort key: a larger key means a larger monomial."""
        e = mono if self.priority is None else tuple(mono[i] for i in self.priority)
        if self.kind == "lex":
            return e
        if self.weights is None:
            deg = sum(mono)
        else:
            deg = sum(w * x for w, x in zip(self.weights, mono))
        if self.kind == "deglex":
            return (deg, e)
        return (deg, tuple(-x for x in reversed(e)))

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if not p:
            raise ValueError("zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)


DEGREVLEX = MonomialOrder()


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    lc = p.coefficient(order.leading_monomial(p))
    return p if lc == 1 else p.scale(1 / lc)


def _reduce(p: Polynomial, basis: Sequence[tuple[Polynomial, Monomial]], order: MonomialOrder) -> Polynomial:
    """Full reduction of p modulo basis (pairs of monic polynomial, leading monomial)."""
    key = order.key
    work = dict(p.terms)
    rem: dict[Monomial, Fraction] = {}
    while work:
        lm = max(work, key=key)
        c = work[lm]
        for g, glm in basis:
            if _divides(glm, lm):
                q = _quotient(lm, glm)
                for m, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(m, q))
                    v = work.get(mm, 0) - c * gc
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[lm] = c
            del work[lm]
    return Polynomial._raw(p.variables, rem)


def _spoly(f: Polynomial, flm: Monomial, g: Polynomial, glm: Monomial) -> Polynomial:
    l = _lcm(flm, glm)
    return f.mul_monomial(_quotient(l, flm)) - g.mul_monomial(_quotient(l, glm))


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    generators: tuple[Polynomial, ...]
    ideal_source: tuple[Polynomial, ...] = field(compare=False)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ideal_source[0].variables

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(self.order.leading_monomial(g) for g in self.generators)

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first) and
    pruned by Buchberger's coprimality and chain criteria.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].variables
    for g in gens:
        if g.variables != ring:
            raise AmbientMismatchError("generators must share a ring")

    basis: list[tuple[Polynomial, Monomial]] = []
    pairs: set[tuple[int, int]] = set()

    def add(p: Polynomial) -> None:
        p = _monic(p, order)
        lm = order.leading_monomial(p)
        k = len(basis)
        basis.append((p, lm))
        for i in range(k):
            pairs.add((i, k))

    for g in gens:
        r = _reduce(g, basis, order)
        if r:
            add(r)

    def pair_key(ij):
        i, j = ij
        l = _lcm(basis[i][1], basis[j][1])
        return (sum(l), order.key(l), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        fi, li = basis[i]
        fj, lj = basis[j]
        if all(not (a and b) for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        l = _lcm(li, lj)
        chain = False
        for k, (_, lk) in enumerate(basis):
            if k in (i, j) or not _divides(lk, l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(fi, li, fj, lj), basis, order)
        if r:
            add(r)

    # minimalize, then interreduce
    minimal = []
    for idx, (p, lm) in enumerate(basis):
        redundant = False
        for jdx, (_, other) in enumerate(basis):
            if jdx == idx or not _divides(other, lm):
                continue
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((p, lm))
    reduced = []
    for idx, (p, lm) in enumerate(minimal):
        others = [b for jdx, b in enumerate(minimal) if jdx != idx]
        tail = p - Polynomial.monomial(ring, lm, p.coefficient(lm))
        r = Polynomial.monomial(ring, lm) + _reduce(tail, others, order)
        reduced.append((r, lm))
    reduced.sort(key=lambda b: order.key(b[1]))
    return GroebnerBasis(order, tuple(p for p, _ in reduced), tuple(gens))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if p.variables != gb.variables:
        raise AmbientMismatchError("polynomial and basis live in different rings")
    pairs = list(zip(gb.generators, gb.leading_monomials))
    return _reduce(p, pairs, gb.order)


def is_artinian(gb: GroebnerBasis) -> bool:
    n = len(gb.variables)
    pure = set()
    for lm in gb.leading_monomials:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            pure.add(nz[0])
        elif not nz:
            return True  # unit ideal, zero quotient
    return len(pure) == n


def standard_monomials(gb: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the leading-term ideal, in increasing order."""
    if not is_artinian(gb):
        raise NotArtinianError("quotient not Artinian")
    lms = gb.leading_monomials
    n = len(gb.variables)
    start = (0,) * n
    if any(_divides(lm, start) for lm in lms):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                mm = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if mm in seen or any(_divides(lm, mm) for lm in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
    return sorted(seen, key=gb.order.key)
