"""Presentations of the classical matrix Lie algebras.

A spec fixes a family (gl, even or odd orthogonal, symplectic) and a
rank n, and with them the combinatorial skeleton the rest of the
package works against: the canonical generator list in its global PBW
order, structure constants, triangular classes, ad-weights, and the
parabolic (Levi) data of the nested subalgebra chain.

Index conventions.  gl_n rows and columns run 1..n.  The orthogonal
and symplectic algebras of rank n act on C^N with rows indexed by
-n..-1,1..n, plus 0 when N = 2n+1, and are spanned by

    F[i,j] = E[i,j] - theta(i,j) E[-j,-i],

where theta is identically 1 in the orthogonal case and sgn(i) sgn(j)
in the symplectic one.  These satisfy F[-j,-i] = -theta(i,j) F[i,j],
so exactly one member of each pair is kept as a canonical generator
(the lexicographically smaller index pair; orthogonal F[i,-i] vanishes
outright and resolves to zero).  The Cartan basis is
H_m = F[m-n-1, m-n-1] for m = 1..n, so H_1 sits in the outermost
block; for gl_n it is H_m = E[m,m].

The global generator order nests the block chain.  Level m contributes

    lowering(m) < whole block (m-1) < Cartan(m) < raising(m),

which is what lets both Harish-Chandra style projections act as plain
monomial filters; the enveloping module explains why.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

ZERO = Fraction(0)
ONE = Fraction(1)

NEG, CARTAN, POS = "neg", "cartan", "pos"


class Family(enum.Enum):
    GL = "gl"
    O_EVEN = "o_even"
    O_ODD = "o_odd"
    SP = "sp"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, Family):
            return value
        try:
            return cls(str(value))
        except ValueError:
            raise ValueError(f"unknown family {value!r}") from None


_EPSILON = {Family.O_EVEN: Fraction(0), Family.O_ODD: Fraction(1, 2),
            Family.SP: Fraction(1)}


class AlgebraSpec:
    """Immutable description of one classical Lie algebra.

    Rank 0 is permitted; it describes the degenerate inner algebra that
    the corank-one projection formulas bottom out in (for the odd
    orthogonal family it still acts on a one dimensional space).
    """

    def __init__(self, family, n: int):
        family = Family.parse(family)
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.family = family
        self.n = n
        if family is Family.GL:
            self.N = n
            self.epsilon = None
            self.matrix_indices = tuple(range(1, n + 1))
            self.rho = tuple(Fraction(n - k) for k in range(1, n + 1))
        else:
            odd = family is Family.O_ODD
            self.N = 2 * n + (1 if odd else 0)
            self.epsilon = _EPSILON[family]
            self.matrix_indices = tuple(i for i in range(-n, n + 1) if i != 0 or odd)
            self.rho = tuple(self.epsilon + n - k for k in range(1, n + 1))
        self._index_set = frozenset(self.matrix_indices)
        gens = self._build_order()
        self.gens = tuple(gens)
        self.gen_index = {p: k for k, p in enumerate(gens)}
        self.gen_level = tuple(max(abs(i), abs(j)) for i, j in gens)
        self.triangular = tuple(
            CARTAN if i == j else (POS if i < j else NEG) for i, j in gens)
        if family is Family.GL:
            self.cartan_by_coord = tuple(self.gen_index[(m, m)] for m in range(1, n + 1))
        else:
            self.cartan_by_coord = tuple(
                self.gen_index[(m - n - 1, m - n - 1)] for m in range(1, n + 1))
        self.cartan_coord = {g: k for k, g in enumerate(self.cartan_by_coord)}
        self.weights = tuple(self._weight_of(p) for p in gens)
        self._brackets = self._fill_brackets()
        # caches used by the enveloping engine; deterministic contents,
        # shared safely because make_spec memoises instances
        self._cache_gtm = {}
        self._cache_mm = {}
        self._cache_misc = {}

    # -- construction helpers ------------------------------------------

    def _build_order(self):
        if self.family is Family.GL:
            def block(m):
                if m == 0:
                    return []
                out = [(m, j) for j in range(1, m)]
                out += block(m - 1)
                out.append((m, m))
                out += [(i, m) for i in range(1, m)]
                return out
            return block(self.n)
        odd = self.family is Family.O_ODD

        def block(m):
            if m == 0:
                return []
            rng = [i for i in range(-m + 1, m + 1) if i != 0 or odd]
            neg = [(i, -m) for i in rng if not self._is_zero_pair(i, -m)]
            pos = [(-m, j) for j in rng if not self._is_zero_pair(-m, j)]
            return neg + block(m - 1) + [(-m, -m)] + pos
        return block(self.n)

    def _is_zero_pair(self, i, j):
        return self.family in (Family.O_EVEN, Family.O_ODD) and j == -i

    def _eps_hat(self, i):
        v = [0] * self.n
        if i > 0:
            v[self.n - i] = -1
        elif i < 0:
            v[self.n + i] = 1
        return v

    def _weight_of(self, pair):
        i, j = pair
        if self.family is Family.GL:
            v = [0] * self.n
            v[i - 1] += 1
            v[j - 1] -= 1
            return tuple(v)
        a = self._eps_hat(i)
        b = self._eps_hat(j)
        return tuple(x - y for x, y in zip(a, b))

    def entry_weight(self, i, j):
        """Ad-weight of the (i, j) matrix entry, as H-coordinates."""
        if i not in self._index_set or j not in self._index_set:
            raise ValueError(f"indices ({i}, {j}) outside the algebra")
        return self._weight_of((i, j))

    def theta(self, i, j) -> int:
        if self.family is Family.SP:
            return (1 if i > 0 else -1) * (1 if j > 0 else -1)
        return 1

    def resolve(self, i, j):
        """Express E-span element F[i,j] (or gl E[i,j]) in canonical terms.

        Returns (coefficient, generator index); the index is None when
        the element is zero (orthogonal F[i,-i]).  Raises on indices
        outside the matrix index set.
        """
        if i not in self._index_set or j not in self._index_set:
            raise ValueError(f"indices ({i}, {j}) outside the algebra")
        if self.family is Family.GL:
            return ONE, self.gen_index[(i, j)]
        if self._is_zero_pair(i, j):
            return ZERO, None
        idx = self.gen_index.get((i, j))
        if idx is not None:
            return ONE, idx
        return Fraction(-self.theta(i, j)), self.gen_index[(-j, -i)]

    def _fill_brackets(self):
        table = {}
        ngen = len(self.gens)
        for a in range(ngen):
            i, j = self.gens[a]
            for b in range(ngen):
                k, l = self.gens[b]
                acc = {}
                if self.family is Family.GL:
                    raw = []
                    if j == k:
                        raw.append((ONE, (i, l)))
                    if l == i:
                        raw.append((-ONE, (k, j)))
                else:
                    raw = []
                    if k == j:
                        raw.append((ONE, (i, l)))
                    if i == l:
                        raw.append((-ONE, (k, j)))
                    if i == -k:
                        raw.append((Fraction(-self.theta(k, -j)), (-j, l)))
                    if -l == j:
                        raw.append((Fraction(self.theta(i, -l)), (k, -i)))
                for coeff, pair in raw:
                    s, idx = self.resolve(*pair)
                    if idx is not None and s:
                        acc[idx] = acc.get(idx, ZERO) + coeff * s
                table[(a, b)] = tuple(sorted(
                    (g, c) for g, c in acc.items() if c))
        return table

    # -- queries -------------------------------------------------------

    def bracket(self, a: int, b: int):
        """Structure constants of [gen a, gen b] as ((index, coeff), ...)."""
        return self._brackets[(a, b)]

    @property
    def label(self) -> str:
        prefix = {Family.GL: "gl", Family.SP: "sp",
                  Family.O_EVEN: "o", Family.O_ODD: "o"}[self.family]
        return f"{prefix}_{self.N}"

    def gen_name(self, idx: int) -> str:
        i, j = self.gens[idx]
        letter = "E" if self.family is Family.GL else "F"
        return f"{letter}[{i},{j}]"

    def __repr__(self):
        return f"AlgebraSpec({self.family.value!r}, {self.n})"


@lru_cache(maxsize=None)
def _make_spec_cached(family: Family, n: int) -> AlgebraSpec:
    return AlgebraSpec(family, n)


def make_spec(family, n: int) -> AlgebraSpec:
    """Shared immutable spec; memoised so engine caches are reused."""
    return _make_spec_cached(Family.parse(family), n)


def inner_spec(spec: AlgebraSpec) -> AlgebraSpec:
    """The rank n-1 algebra of the same family, for the corank-one step."""
    if spec.n == 0:
        raise ValueError("rank 0 has no inner algebra")
    return make_spec(spec.family, spec.n - 1)


def as_weight(spec: AlgebraSpec, coords):
    """Validate and coerce a weight to a tuple of n fractions."""
    out = tuple(Fraction(c) if not isinstance(c, float) else _reject(c)
                for c in coords)
    if len(out) != spec.n:
        raise ValueError(f"weight must have {spec.n} coordinates, got {len(out)}")
    return out


def _reject(c):
    raise TypeError("floating point weight coordinates are not accepted")


@dataclass(frozen=True)
class ParabolicData:
    """Levi and nilradical generator sets at one level of the chain.

    Level t keeps the whole rank t inner block together with every
    Cartan generator above it; level n is the full algebra.
    """

    spec: AlgebraSpec = field(repr=False)
    level: int
    levi: frozenset
    upper: frozenset
    lower: frozenset

    def contains_weight(self, wt) -> bool:
        """Whether wt lies in the lattice spanned by the Levi's roots."""
        spec = self.spec
        n, t = spec.n, self.level
        wt = tuple(wt)
        if len(wt) != n:
            raise ValueError("wrong number of weight coordinates")
        if any(Fraction(c).denominator != 1 for c in wt):
            return False
        if spec.family is Family.GL:
            return all(wt[k] == 0 for k in range(t, n)) and sum(wt[:t]) == 0
        if any(wt[k] != 0 for k in range(n - t)):
            return False
        inner = wt[n - t:]
        if spec.family is Family.O_ODD:
            return True
        if spec.family is Family.O_EVEN and t == 1:
            return inner[0] == 0
        return sum(inner) % 2 == 0


def parabolic(spec: AlgebraSpec, level: int) -> ParabolicData:
    if not 1 <= level <= spec.n:
        raise ValueError(f"level must be in 1..{spec.n}")
    levi, upper, lower = set(), set(), set()
    for g in range(len(spec.gens)):
        if spec.gen_level[g] <= level or spec.triangular[g] == CARTAN:
            levi.add(g)
        elif spec.triangular[g] == POS:
            upper.add(g)
        else:
            lower.add(g)
    return ParabolicData(spec, level, frozenset(levi), frozenset(upper),
                         frozenset(lower))
