"""Exact univariate polynomials and truncated Laurent expansions at infinity.

All coefficients are fractions.Fraction.  Nothing in the package uses
floating point: certification of minimal polynomials rests on exact
zero tests, so approximate arithmetic would prove nothing.

UniPoly stores coefficients in ascending degree order with trailing
zeros stripped, hence equal values have equal representations.  A
LaurentTrunc is an expansion in powers of 1/u around u = infinity: a
polynomial part plus the coefficients of u^-1 .. u^-K.  Orders beyond
u^-K are unknown; the arithmetic tracks how far a result can still be
trusted (multiplying by a degree d polynomial loses d orders).

pade_reconstruct recovers a rational function from such an expansion by
trying denominator degrees in ascending order and solving the linear
system given by the whole available tail, so a successful fit is
automatically the reduced form and a short or corrupted tail is
detected instead of silently misread.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import solve_with_rank

Rat = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/2', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


class TruncationError(ValueError):
    """The truncated tail is too short to determine the answer."""


class ReconstructionError(ValueError):
    """No rational function within the degree bound matches the tail."""


class UniPoly:
    """Univariate polynomial over Q, coefficients ascending in degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        """The variable u itself."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls.one()
        for r in roots:
            p = p * cls((-rat(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly((self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else UniPoly((-rat(other),)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return UniPoly((c * a for a in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            other = UniPoly((rat(other),))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        for k in range(len(rem) - 1, d - 1, -1):
            if rem[k]:
                f = rem[k] / lead
                q[k - d] = f
                for j in range(d + 1):
                    rem[k - d + j] -= f * other.coeffs[j]
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ValueError("cannot normalise the zero polynomial")
        inv = ONE / self.coeffs[-1]
        return UniPoly((inv * c for c in self.coeffs))

    def evaluate(self, x) -> Fraction:
        x = rat(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "UniPoly":
        """Return p(u + c)."""
        c = rat(c)
        acc = UniPoly.zero()
        lin = UniPoly((c, 1))
        for a in reversed(self.coeffs):
            acc = acc * lin + UniPoly((a,))
        return acc

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def rational_roots(self) -> "list[tuple[Fraction, int]]":
        """All rational roots with multiplicities, ascending."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        found = []
        p = self
        val = 0
        while p.coeff(0) == 0 and p.degree >= 1:
            p = p // UniPoly.x()
            val += 1
        if val:
            found.append((ZERO, val))
        if p.degree >= 1:
            den_lcm = 1
            for c in p.coeffs:
                den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
            ints = [int(c * den_lcm) for c in p.coeffs]
            a0, an = abs(ints[0]), abs(ints[-1])
            cands = set()
            for pn in _divisors(a0):
                for qn in _divisors(an):
                    cands.add(Fraction(pn, qn))
                    cands.add(Fraction(-pn, qn))
            for r in sorted(cands):
                mult = 0
                while p.degree >= 1 and p.evaluate(r) == 0:
                    p = p // UniPoly((-r, 1))
                    mult += 1
                if mult:
                    found.append((r, mult))
        return sorted(found)

    def linear_factorization(self) -> "list[tuple[Fraction, int]]":
        """Roots with multiplicities when the polynomial splits over Q.

        Raises ValueError when an irreducible factor of degree >= 2
        remains, since the callers (certification, root reporting) have
        nothing sensible to do with such a factor.
        """
        roots = self.rational_roots()
        if sum(m for _, m in roots) != self.degree:
            raise ValueError("polynomial does not split over the rationals")
        return roots

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}u" + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class LaurentTrunc:
    """Expansion P(u) + sum_{m=1..K} c_m u^-m with unknown orders past K."""

    __slots__ = ("poly", "tail", "order")

    def __init__(self, poly: UniPoly, tail: Sequence, order: "int | None" = None):
        self.poly = poly
        cs = tuple(rat(c) for c in tail)
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) != order:
            raise ValueError("tail length must equal the truncation order")
        self.tail = cs
        self.order = order

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "LaurentTrunc":
        return cls(p, (ZERO,) * order, order)

    def tail_coeff(self, m: int) -> Fraction:
        """Coefficient of u^-m, 1 <= m <= order."""
        if not 1 <= m <= self.order:
            raise IndexError(f"order {m} is beyond the truncation")
        return self.tail[m - 1]

    def __eq__(self, other):
        if isinstance(other, LaurentTrunc):
            return (self.poly, self.tail, self.order) == (other.poly, other.tail, other.order)
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.tail))

    def _binop(self, other, sign):
        k = min(self.order, other.order)
        poly = self.poly + sign * other.poly
        tail = tuple(self.tail[i] + sign * other.tail[i] for i in range(k))
        return LaurentTrunc(poly, tail, k)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return LaurentTrunc(-self.poly, tuple(-c for c in self.tail), self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return LaurentTrunc(self.poly * c, tuple(c * t for t in self.tail), self.order)
        return NotImplemented

    __rmul__ = __mul__

    def mul_poly(self, p: UniPoly) -> "LaurentTrunc":
        """Multiply by a polynomial, losing deg(p) orders of the tail."""
        if p.is_zero():
            return LaurentTrunc.from_poly(UniPoly.zero(), self.order)
        new_order = self.order - p.degree
        if new_order < 0:
            raise TruncationError("tail too short to multiply by this polynomial")
        poly = self.poly * p
        newtail = [ZERO] * new_order
        for j, b in enumerate(p.coeffs):
            if not b:
                continue
            for m in range(1, self.order + 1):
                e = j - m
                if e >= 0:
                    poly = poly + UniPoly([ZERO] * e + [b * self.tail[m - 1]])
                elif -e <= new_order:
                    newtail[-e - 1] += b * self.tail[m - 1]
        return LaurentTrunc(poly, newtail, new_order)

    def __repr__(self):
        return f"LaurentTrunc({self.poly!r}, {list(self.tail)!r})"


def series_of_rational(num: UniPoly, den: UniPoly, order: int) -> LaurentTrunc:
    """Expand num/den at u = infinity to the given truncation order."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    q, r = divmod(num, den)
    d = den.degree
    lead = den.coeffs[-1]
    tail = []
    for m in range(1, order + 1):
        acc = r.coeff(d - m)
        for t in range(1, m):
            acc -= tail[t - 1] * den.coeff(d - m + t)
        tail.append(acc / lead)
    return LaurentTrunc(q, tail, order)


def pade_reconstruct(series: LaurentTrunc, dmax: int) -> "tuple[UniPoly, UniPoly]":
    """Recover (num, den) with den monic of minimal degree <= dmax.

    Denominator degrees are tried in ascending order; for each degree
    the whole tail is used, so the first consistent fit is the reduced
    answer.  Raises TruncationError when the tail is too short to pin a
    degree down and ReconstructionError when nothing fits within dmax.
    """
    c = series.tail
    k = series.order
    for d in range(dmax + 1):
        if k - d < d:
            raise TruncationError(
                f"tail of length {k} cannot determine a degree {d} denominator")
        rows = [[c[j + m] for j in range(d)] for m in range(k - d)]
        rhs = [-c[d + m] for m in range(k - d)]
        sol, nfree = solve_with_rank(rows, rhs)
        if sol is None:
            continue
        # Distinct rational functions with denominator degree <= d cannot
        # agree on 2d tail orders, so a consistent system is determined.
        assert nfree == 0 or d == 0
        den = UniPoly(list(sol) + [ONE])
        rem = [ZERO] * d
        for e in range(d):
            acc = ZERO
            for j in range(e + 1, d + 1):
                b = ONE if j == d else sol[j]
                acc += b * c[j - e - 1]
            rem[e] = acc
        num = series.poly * den + UniPoly(rem)
        if not num.is_zero() and not num.gcd(den).degree == 0 and den.degree > 0:
            raise AssertionError("reconstructed fraction is not reduced")
        return num, den
    raise ReconstructionError(
        f"no rational function with denominator degree <= {dmax} matches the tail")


def monic_lcm(polys: Iterable[UniPoly]) -> UniPoly:
    """Monic least common multiple, with lcm() of nothing being 1."""
    out = UniPoly.one()
    for p in polys:
        if p.is_zero():
            raise ValueError("zero polynomial has no lcm")
        g = out.gcd(p)
        out = ((out * p) // g).monic()
    return out
