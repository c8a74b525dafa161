"""PBW arithmetic in the universal enveloping algebra.

A monomial is a tuple of generator indices, weakly increasing in the
spec's global order; an element is a finite rational combination of
such monomials.  Products are straightened by the usual rewriting

    x y = y x + [x, y]        (x > y),

applied through two memoised primitives: multiplication of a monomial
by one generator on the left, and monomial times monomial.  The
straightening of a word only ever creates the sorted word of the same
multiset (coefficient 1) plus terms of strictly smaller degree, which
is what the recursion below leans on for termination.

Why projections are monomial filters.  In the nested order every
lowering generator of an outer level precedes the whole inner block,
and every raising generator follows it.  A sorted monomial containing
a lowering generator therefore begins with one, so it lies in the left
ideal picture n^- U(g); a sorted monomial with a raising generator but
none lowering ends with Cartan and raising factors only, and its
rightmost raising factor commutes past the higher Cartans to its
right, so the monomial lies in U(g) n^+.  The same argument applies
verbatim at every level of the Levi chain, with "lowering/raising"
read relative to that level.  Hence the projection along

    U(g) = U(m) (+) (n^- U(g) + U(g) n^+)

keeps exactly the monomials all of whose factors lie in the Levi set,
both for the Cartan subalgebra (project_hc) and for the corank
parabolics (project_relative).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .algebra import (CARTAN, AlgebraSpec, Family, ParabolicData, as_weight,
                      inner_spec)

ZERO = Fraction(0)
ONE = Fraction(1)


def _acc(d, key, c):
    v = d.get(key, ZERO) + c
    if v:
        d[key] = v
    elif key in d:
        del d[key]


def _gen_times_mono(spec, g, m):
    """Normal form of generator g times sorted monomial m, as a dict."""
    cache = spec._cache_gtm
    out = cache.get((g, m))
    if out is not None:
        return out
    if not m or g <= m[0]:
        out = {(g,) + m: ONE}
    else:
        b, rest = m[0], m[1:]
        acc = {}
        for mu, c in _gen_times_mono(spec, g, rest).items():
            for nu, c2 in _gen_times_mono(spec, b, mu).items():
                _acc(acc, nu, c * c2)
        for h, c in spec.bracket(g, b):
            for mu, c2 in _gen_times_mono(spec, h, rest).items():
                _acc(acc, mu, c * c2)
        out = acc
    cache[(g, m)] = out
    return out


def _mono_mul(spec, m1, m2):
    """Normal form of the product of two sorted monomials, as a dict."""
    if not m1:
        return {m2: ONE}
    if not m2:
        return {m1: ONE}
    if m1[-1] <= m2[0]:
        return {m1 + m2: ONE}
    cache = spec._cache_mm
    out = cache.get((m1, m2))
    if out is not None:
        return out
    cur = {m2: ONE}
    for g in reversed(m1):
        nxt = {}
        for m, c in cur.items():
            for mu, c2 in _gen_times_mono(spec, g, m).items():
                _acc(nxt, mu, c * c2)
        cur = nxt
    cache[(m1, m2)] = cur
    return cur


class UElement:
    """Element of U(g) in PBW normal form.  Treat as immutable."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms=None):
        self.spec = spec
        self.terms = dict(terms) if terms else {}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def one(cls, spec):
        return cls(spec, {(): ONE})

    @classmethod
    def scalar(cls, spec, c):
        c = Fraction(c)
        return cls(spec, {(): c} if c else {})

    @classmethod
    def generator(cls, spec, i, j):
        """The element F[i,j] (gl: E[i,j]) for any valid index pair."""
        c, idx = spec.resolve(i, j)
        if idx is None or not c:
            return cls.zero(spec)
        return cls(spec, {(idx,): c})

    @classmethod
    def cartan(cls, spec, k):
        """H_k, 1-based."""
        return cls(spec, {(spec.cartan_by_coord[k - 1],): ONE})

    # -- ring structure ------------------------------------------------

    def _check(self, other):
        if other.spec is not self.spec:
            raise ValueError("elements live over different algebra specs")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UElement.scalar(self.spec, other)
        if not isinstance(other, UElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return UElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return UElement(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UElement.scalar(self.spec, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return UElement.zero(self.spec)
            return UElement(self.spec, {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, UElement):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cc in _mono_mul(self.spec, m1, m2).items():
                    _acc(out, m, c * cc)
        return UElement(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, UElement):
            return self.spec is other.spec and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == UElement.scalar(self.spec, other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.spec), tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def commutator(self, other) -> "UElement":
        return self * other - other * self

    @property
    def degree(self) -> int:
        """Largest monomial length, -1 for zero."""
        return max((len(m) for m in self.terms), default=-1)

    # -- weight structure ----------------------------------------------

    def weight_components(self):
        """Split into ad-weight homogeneous parts: {weight: UElement}."""
        spec = self.spec
        parts = {}
        for m, c in self.terms.items():
            wt = [0] * spec.n
            for g in m:
                w = spec.weights[g]
                for k in range(spec.n):
                    wt[k] += w[k]
            parts.setdefault(tuple(wt), {})[m] = c
        return {w: UElement(spec, t) for w, t in sorted(parts.items())}

    def weight(self):
        """Common ad-weight of all monomials; raises if inhomogeneous."""
        comps = self.weight_components()
        if len(comps) > 1:
            raise ValueError("element is not weight homogeneous")
        if not comps:
            return (0,) * self.spec.n
        return next(iter(comps))

    # -- display -------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items())
        bits = []
        for m, c in items:
            names = []
            k = 0
            while k < len(m):
                e = 1
                while k + e < len(m) and m[k + e] == m[k]:
                    e += 1
                nm = self.spec.gen_name(m[k])
                names.append(nm if e == 1 else f"{nm}^{e}")
                k += e
            body = "*".join(names) if names else "1"
            if c == 1 and names:
                term = body
            elif c == -1 and names:
                term = "-" + body
            else:
                term = f"{c}*{body}" if names else str(c)
            bits.append(term)
        out = bits[0]
        for b in bits[1:]:
            out += " + " + b if not b.startswith("-") else " - " + b[1:]
        return out

    def __repr__(self):
        return f"<UElement {self}>"


def pbw_normalize(spec: AlgebraSpec, expr) -> UElement:
    """Normalise a formal expression in the generators.

    Accepts an UElement (returned unchanged), a single word (an
    iterable of index pairs), or an iterable of (coefficient, word)
    terms.  Unknown index pairs raise ValueError.
    """
    if isinstance(expr, UElement):
        if expr.spec is not spec:
            raise ValueError("element belongs to a different spec")
        return expr
    expr = list(expr)
    if not expr or not (len(expr[0]) == 2 and isinstance(expr[0][0], (int, Fraction))
                        and not isinstance(expr[0][1], (int, Fraction))):
        # bare word; the empty word is the unit
        expr = [(ONE, expr)]
    out = UElement.zero(spec)
    for coeff, word in expr:
        term = UElement.scalar(spec, coeff)
        for pair in word:
            i, j = pair
            term = term * UElement.generator(spec, i, j)
        out = out + term
    return out


def project_hc(a: UElement) -> UElement:
    """Projection onto U(h) along n^- U(g) + U(g) n^+."""
    tri = a.spec.triangular
    kept = {m: c for m, c in a.terms.items()
            if all(tri[g] == CARTAN for g in m)}
    return UElement(a.spec, kept)


def project_relative(a: UElement, p: ParabolicData) -> UElement:
    """Projection onto U(levi) along lower U(g) + U(g) upper."""
    if p.spec is not a.spec:
        raise ValueError("parabolic data belongs to a different spec")
    levi = p.levi
    kept = {m: c for m, c in a.terms.items() if all(g in levi for g in m)}
    return UElement(a.spec, kept)


def evaluate_at_weight(a: UElement, lam) -> Fraction:
    """Evaluate a Cartan element by H_k -> lam_k.

    Raises ValueError when a has a factor outside the Cartan
    subalgebra; project first.
    """
    spec = a.spec
    lam = as_weight(spec, lam)
    coord = spec.cartan_coord
    total = ZERO
    for m, c in a.terms.items():
        v = c
        for g in m:
            k = coord.get(g)
            if k is None:
                raise ValueError("element does not lie in the Cartan subalgebra")
            v *= lam[k]
        total += v
    return total


def hc_evaluate(a: UElement, lam) -> Fraction:
    """evaluate_at_weight after project_hc, the workhorse residual map."""
    return evaluate_at_weight(project_hc(a), lam)


def restrict_corank_one(a: UElement, outer_value) -> UElement:
    """Map a Levi element at level n-1 into the inner spec's U.

    The level n-1 Levi is U(inner algebra) tensor the polynomial ring
    on the outer Cartan generator; the outer generator is evaluated at
    outer_value (gl: H_n -> lambda_n, others: H_1 -> lambda_1).  Terms
    with factors outside that Levi are rejected.
    """
    spec = a.spec
    sub = inner_spec(spec)
    outer_value = Fraction(outer_value)
    outer_cartan = spec.cartan_by_coord[spec.n - 1] \
        if spec.family is Family.GL else spec.cartan_by_coord[0]
    level = spec.n - 1
    remap = {}
    for g, pair in enumerate(spec.gens):
        if spec.gen_level[g] <= level:
            remap[g] = sub.gen_index[pair]
    out = {}
    for m, c in a.terms.items():
        coeff = c
        mono = []
        for g in m:
            if g == outer_cartan:
                coeff *= outer_value
            elif g in remap:
                mono.append(remap[g])
            else:
                raise ValueError("element is not supported on the corank-one Levi")
        _acc(out, tuple(mono), coeff)
    return UElement(sub, out)
