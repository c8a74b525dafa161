"""Weyl algebra on matrix variables and the dual pair transfer checks.

The algebra acts on polynomials on k x n matrices: position variables
x[a, i] and derivatives d[a, i] with a running over the k rows and i
over the n columns.  A monomial is kept in normal order, every
position factor to the left of every derivative factor, and the
product of two normal monomials is expanded in closed form

    (x^g d^b)(x^G d^B)
        = sum over mu <= min(b, G) of
          C(b, mu) C(G, mu) mu! x^(g + G - mu) d^(b + B - mu),

with all operations taken componentwise; this is the two-block
analogue of repeatedly commuting a derivative past a position factor.

Two commuting copies of general linear Lie algebras embed here: the
k x k matrix L = X D^t acting by left multiplication on the matrix
space and the n x n matrix R = X^t D acting on the right.  The checks
below confirm, symbolically, the power convolution identity relating
R-powers applied to a position row with shifted L-powers, its
resolvent form

    u T(u) = I + (T'(u + k - n) X)^t D

order by order, and minimal polynomial divisibility across the pair
on the Euler family of modules (n = 1, homogeneous polynomials of
degree d against the k-sided symmetric power).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial

from .algebra import make_spec
from .polyrat import UniPoly
from .shuffle import minpoly_from_weight

ZERO = Fraction(0)
ONE = Fraction(1)


class WeylAlgebra:
    """Index bookkeeping for the Weyl algebra on a k x n matrix."""

    __slots__ = ("n", "k", "nvars")

    def __init__(self, n: int, k: int):
        if n < 1 or k < 1:
            raise ValueError("matrix dimensions must be positive")
        self.n = n
        self.k = k
        self.nvars = n * k

    def slot(self, a: int, i: int) -> int:
        if not (1 <= a <= self.k and 1 <= i <= self.n):
            raise ValueError(f"variable ({a}, {i}) out of range")
        return (a - 1) * self.n + (i - 1)

    def x(self, a: int, i: int) -> "WeylElement":
        e = [0] * self.nvars
        e[self.slot(a, i)] = 1
        z = (0,) * self.nvars
        return WeylElement(self, {(tuple(e), z): ONE})

    def d(self, a: int, i: int) -> "WeylElement":
        e = [0] * self.nvars
        e[self.slot(a, i)] = 1
        z = (0,) * self.nvars
        return WeylElement(self, {(z, tuple(e)): ONE})


def _acc(d, key, c):
    v = d.get(key, ZERO) + c
    if v:
        d[key] = v
    elif key in d:
        del d[key]


def _mono_mul(alg, m1, m2):
    """Normal form of the product of two normal monomials, as a dict."""
    (g1, b1), (g2, b2) = m1, m2
    active = [v for v in range(alg.nvars) if b1[v] and g2[v]]
    out = {}
    for mu in iproduct(*(range(min(b1[v], g2[v]) + 1) for v in active)):
        coeff = ONE
        xe, de = list(g1), list(b1)
        for v, m in zip(active, mu):
            coeff *= comb(b1[v], m) * comb(g2[v], m) * factorial(m)
        for v in range(alg.nvars):
            xe[v] += g2[v]
            de[v] += b2[v]
        for v, m in zip(active, mu):
            xe[v] -= m
            de[v] -= m
        _acc(out, (tuple(xe), tuple(de)), coeff)
    return out


class WeylElement:
    """Polynomial coefficient differential operator.  Treat as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: WeylAlgebra, terms=None):
        self.alg = alg
        self.terms = dict(terms) if terms else {}

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def scalar(cls, alg, c):
        c = Fraction(c)
        z = (0,) * alg.nvars
        return cls(alg, {(z, z): c} if c else {})

    @classmethod
    def one(cls, alg):
        return cls.scalar(alg, 1)

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements live over different Weyl algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylElement.scalar(self.alg, other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return WeylElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylElement.scalar(self.alg, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return WeylElement.zero(self.alg)
            return WeylElement(self.alg,
                               {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cc in _mono_mul(self.alg, m1, m2).items():
                    _acc(out, m, c * cc)
        return WeylElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == WeylElement.scalar(self.alg, other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.alg), tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def commutator(self, other) -> "WeylElement":
        return self * other - other * self


def weyl_normalize(alg: WeylAlgebra, expr) -> WeylElement:
    """Normal form of an expression in positions and derivatives.

    Accepts either a bare word, an iterable of atoms ("x", a, i) or
    ("d", a, i), or a list of (coefficient, word) pairs.
    """
    expr = list(expr)
    if not expr or not (len(expr[0]) == 2
                        and isinstance(expr[0][0], (int, Fraction))):
        expr = [(ONE, expr)]
    total = WeylElement.zero(alg)
    for coeff, word in expr:
        acc = WeylElement.scalar(alg, coeff)
        for kind, a, i in word:
            if kind == "x":
                acc = acc * alg.x(a, i)
            elif kind == "d":
                acc = acc * alg.d(a, i)
            else:
                raise ValueError(f"unknown atom kind {kind!r}")
        total = total + acc
    return total


@dataclass(frozen=True)
class DualPairEmbedding:
    """The commuting matrices L = X D^t (k x k) and R = X^t D (n x n)."""

    alg: WeylAlgebra
    left: tuple
    right: tuple


def dual_pair(n: int, k: int) -> DualPairEmbedding:
    alg = WeylAlgebra(n, k)
    left = tuple(
        tuple(sum((alg.x(a, l) * alg.d(b, l) for l in range(1, n + 1)),
                  WeylElement.zero(alg))
              for b in range(1, k + 1))
        for a in range(1, k + 1))
    right = tuple(
        tuple(sum((alg.x(b, i) * alg.d(b, j) for b in range(1, k + 1)),
                  WeylElement.zero(alg))
              for j in range(1, n + 1))
        for i in range(1, n + 1))
    return DualPairEmbedding(alg, left, right)


def _wmat_identity(alg, size):
    return tuple(
        tuple(WeylElement.one(alg) if i == j else WeylElement.zero(alg)
              for j in range(size))
        for i in range(size))


def _wmat_mul(A, B):
    size = len(A)
    return tuple(
        tuple(sum((A[i][l] * B[l][j] for l in range(size)),
                  WeylElement.zero(A[0][0].alg))
              for j in range(size))
        for i in range(size))


def _wmat_powers(alg, M, top):
    powers = [_wmat_identity(alg, len(M))]
    for _ in range(top):
        powers.append(_wmat_mul(powers[-1], M))
    return powers


def _wmat_shift(M, c):
    """M + c I."""
    return tuple(
        tuple(M[i][j] + c if i == j else M[i][j] for j in range(len(M)))
        for i in range(len(M)))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity suite: labels of the failed instances."""

    name: str
    checks: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def check_conv_powers(n: int, k: int, r_max: int) -> CheckReport:
    """Power convolution: sum_l (R^r)_il x_al = sum_b ((L+(n-k)I)^r)_ab x_bi."""
    emb = dual_pair(n, k)
    alg = emb.alg
    rpow = _wmat_powers(alg, emb.right, r_max)
    lpow = _wmat_powers(alg, _wmat_shift(emb.left, Fraction(n - k)), r_max)
    failures = []
    checks = 0
    for r in range(r_max + 1):
        for i in range(1, n + 1):
            for a in range(1, k + 1):
                lhs = sum((rpow[r][i - 1][l - 1] * alg.x(a, l)
                           for l in range(1, n + 1)),
                          WeylElement.zero(alg))
                rhs = sum((lpow[r][a - 1][b - 1] * alg.x(b, i)
                           for b in range(1, k + 1)),
                          WeylElement.zero(alg))
                checks += 1
                if lhs != rhs:
                    failures.append((r, i, a))
    return CheckReport(f"conv_powers(n={n}, k={k})", checks, tuple(failures))


def check_resolvent_transfer(n: int, k: int, K: int) -> CheckReport:
    """Order-by-order form of u T(u) = I + (T'(u + k - n) X)^t D.

    The coefficient of u^-r on the left is R^r; on the right it is the
    matrix with entries sum_ab (S_(r-1))_ab x_bi d_aj, where
    S_m = (L - (k - n) I)^m collects the shifted resolvent expansion.
    The r = 0 order is the identity matrix on both sides.
    """
    emb = dual_pair(n, k)
    alg = emb.alg
    rpow = _wmat_powers(alg, emb.right, K)
    spow = _wmat_powers(alg, _wmat_shift(emb.left, Fraction(n - k)), K - 1)
    failures = []
    checks = n * n   # the trivially equal zeroth order
    for r in range(1, K + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                rhs = WeylElement.zero(alg)
                for a in range(1, k + 1):
                    for b in range(1, k + 1):
                        rhs = rhs + (spow[r - 1][a - 1][b - 1]
                                     * alg.x(b, i) * alg.d(a, j))
                checks += 1
                if rpow[r][i - 1][j - 1] != rhs:
                    failures.append((r, i, j))
    return CheckReport(f"resolvent_transfer(n={n}, k={k})", checks,
                       tuple(failures))


@dataclass(frozen=True)
class DivisibilityReport:
    """One Euler-family divisibility instance q(u) | u q'(u + k - n)."""

    n: int
    k: int
    d: int
    q: UniPoly
    q_prime: UniPoly
    product: UniPoly
    divisible: bool


def check_divisibility_instance(n: int, k: int, d: int) -> DivisibilityReport:
    """Minimal polynomial divisibility across the pair, Euler family.

    The degree-d homogeneous polynomials on the k-row column realize
    the duality between the rank-one Euler operator module, with
    minimal polynomial u - d, and the k-sided symmetric power of
    highest weight (d, 0, ..., 0).
    """
    if n != 1:
        raise ValueError("only the rank-one Euler family is constructible")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    q = UniPoly.from_roots([Fraction(d)])
    spec = make_spec("gl", k)
    q_prime = minpoly_from_weight(spec, (d,) + (0,) * (k - 1))
    product = UniPoly.x() * q_prime.shift(Fraction(k - n))
    return DivisibilityReport(n, k, d, q, q_prime, product,
                              q.divides(product))
