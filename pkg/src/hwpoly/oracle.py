"""Independent finite dimensional oracles.

Two cross-checks live here, neither sharing code paths with the
symbolic engine.  The first realises concrete modules as explicit
matrices (polynomial gl irreducibles through the Young symmetrizer,
plus the trivial and defining modules of every family) and extracts
the minimal polynomial of the generator matrix by exact Krylov
iteration on C^N tensor V.  The second is a truncated Verma module
that applies a word of generators to the highest weight vector factor
by factor, giving the coefficient of the highest weight vector without
ever invoking the normal ordering machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import CARTAN, NEG, AlgebraSpec, Family, as_weight, make_spec
from .linalg import ONE, ZERO, Echelon, mat_vec
from .polyrat import UniPoly, monic_lcm

__all__ = [
    "RepMatrices",
    "VermaTruncation",
    "build_catalog_rep",
    "build_irrep_gl",
    "hw_coefficient",
    "oracle_minpoly",
]


@dataclass(frozen=True)
class RepMatrices:
    """A module given by one matrix per canonical generator."""

    spec: AlgebraSpec
    name: str
    dim: int
    mats: tuple   # mats[gen index] = tuple of row tuples

    def generator_matrix(self, i, j):
        """Dense matrix of F[i,j] (gl E[i,j]), sign folded in."""
        c, idx = self.spec.resolve(i, j)
        if idx is None:
            return [[ZERO] * self.dim for _ in range(self.dim)]
        return [[c * x for x in row] for row in self.mats[idx]]

    def entry(self, i, j, a, b):
        c, idx = self.spec.resolve(i, j)
        if idx is None:
            return ZERO
        return c * self.mats[idx][a][b]


def build_catalog_rep(spec: AlgebraSpec, name: str) -> RepMatrices:
    """The trivial or defining module of any family."""
    ngen = len(spec.gens)
    if name == "trivial":
        mats = tuple((((ZERO,),),) * ngen)
        return RepMatrices(spec, name, 1, mats)
    if name != "defining":
        raise ValueError(f"unknown catalog module {name!r}")
    mi = spec.matrix_indices
    pos = {v: k for k, v in enumerate(mi)}
    dim = len(mi)
    mats = []
    for i, j in spec.gens:
        m = [[ZERO] * dim for _ in range(dim)]
        m[pos[i]][pos[j]] += ONE
        if spec.family is not Family.GL:
            m[pos[-j]][pos[-i]] -= Fraction(spec.theta(i, j))
        mats.append(tuple(tuple(row) for row in m))
    return RepMatrices(spec, name, dim, tuple(mats))


def weyl_dimension_gl(lam):
    """Dimension of the gl irreducible with the given highest weight."""
    n = len(lam)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    d, r = divmod(num, den)
    assert r == 0
    return d


def _apply_place_perm(t, perm):
    out = [None] * len(t)
    for k, v in enumerate(t):
        out[perm[k]] = v
    return tuple(out)


def _perm_group(cells_by_group, d):
    """All permutations of 0..d-1 moving places only inside each group."""
    perms = [tuple(range(d))]
    for cells in cells_by_group:
        new = []
        for assign in itertools.permutations(cells):
            for base in perms:
                p = list(base)
                for src, dst in zip(cells, assign):
                    p[src] = base[dst]
                new.append(tuple(p))
        perms = new
    return perms


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        k = s
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _build_irrep_gl(lam, n, bound):
    spec = make_spec("gl", n)
    if list(lam) != sorted(lam, reverse=True) or lam[-1] < 0:
        raise ValueError("weight must be dominant with nonnegative entries")
    d = sum(lam)
    if d > bound:
        raise ValueError(f"|lambda| = {d} exceeds the oracle bound {bound}")
    if d == 0:
        return build_catalog_rep(spec, "trivial")

    rows = [list(range(sum(lam[:i]), sum(lam[:i + 1])))
            for i in range(n) if lam[i]]
    ncols = lam[0]
    cols = [[row[c] for row in rows if c < len(row)] for c in range(ncols)]
    row_perms = _perm_group(rows, d)
    col_perms = [(p, _perm_sign(p)) for p in _perm_group(cols, d)]

    basis = list(itertools.product(range(n), repeat=d))
    pos = {t: k for k, t in enumerate(basis)}
    ech = Echelon(len(basis))
    for t in basis:
        sym = {}
        for p in row_perms:
            u = _apply_place_perm(t, p)
            sym[u] = sym.get(u, ZERO) + ONE
        img = {}
        for q, sgn in col_perms:
            for u, c in sym.items():
                w = _apply_place_perm(u, q)
                img[w] = img.get(w, ZERO) + sgn * c
        dense = [ZERO] * len(basis)
        for u, c in img.items():
            dense[pos[u]] = c
        ech.insert(dense)
    module = [list(r) for r in ech.rows]
    dim = len(module)
    assert dim == weyl_dimension_gl(lam)

    mats = []
    for i, j in spec.gens:
        cols_out = []
        for vec in module:
            out = [ZERO] * len(basis)
            for k, c in enumerate(vec):
                if not c:
                    continue
                t = basis[k]
                for p_idx, v in enumerate(t):
                    if v == j - 1:
                        s = t[:p_idx] + (i - 1,) + t[p_idx + 1:]
                        out[pos[s]] += c
            coords = ech.coordinates(out)
            assert coords is not None, "action left the module"
            cols_out.append(coords)
        mats.append(tuple(tuple(cols_out[b][a] for b in range(dim))
                          for a in range(dim)))
    return RepMatrices(spec, f"irrep{lam}", dim, tuple(mats))


def build_irrep_gl(lam, n, bound: int = 4) -> RepMatrices:
    """Polynomial gl_n irreducible via the Young symmetrizer.

    The filling is row major; row symmetrization is applied first and
    the signed column sum second.  The rank of the image is checked
    against the Weyl dimension formula before any matrix is extracted.
    """
    lam = tuple(int(x) for x in lam)
    if len(lam) != n:
        raise ValueError("weight length must equal the rank")
    return _build_irrep_gl(lam, n, bound)


def _krylov_annihilator(op, start, maxdeg):
    ech = Echelon(len(start), aug=maxdeg + 1)
    w = list(start)
    for k in range(maxdeg + 1):
        augv = [ZERO] * (maxdeg + 1)
        augv[k] = ONE
        if ech.insert(w + augv) is None:
            res = ech.last_residual
            return UniPoly(res[len(start):len(start) + k + 1])
        w = mat_vec(op, w)
    raise AssertionError("no dependence within the space dimension")


def oracle_minpoly(rep: RepMatrices) -> UniPoly:
    """Minimal polynomial of the generator matrix acting on C^N tensor V.

    Runs a Krylov iteration from every coordinate vector, skipping
    those already killed by the least common multiple found so far.
    """
    spec = rep.spec
    mi = spec.matrix_indices
    dim = rep.dim
    size = len(mi) * dim
    op = [[ZERO] * size for _ in range(size)]
    for ii, i in enumerate(mi):
        for jj, j in enumerate(mi):
            c, idx = spec.resolve(i, j)
            if idx is None or not c:
                continue
            block = rep.mats[idx]
            for a in range(dim):
                row = op[ii * dim + a]
                for b in range(dim):
                    if block[a][b]:
                        row[jj * dim + b] = c * block[a][b]
    q = UniPoly.one()
    for s in range(size):
        start = [ZERO] * size
        start[s] = ONE
        w = [ZERO] * size
        for c in reversed(q.coeffs):
            w = mat_vec(op, w)
            if c:
                w = [x + c * y for x, y in zip(w, start)]
        if all(not x for x in w):
            continue
        q = monic_lcm([q, _krylov_annihilator(op, start, size)])
    return q


class VermaTruncation:
    """Verma module for a highest weight, truncated at a monomial depth.

    Vectors are stored as dictionaries mapping sorted lowering monomials
    (tuples of generator indices) to coefficients; the empty tuple is
    the highest weight vector.  Generators act by the recursion
    g b m = b (g m) + [g, b] m, which only consults the structure
    constants.  Monomials deeper than the truncation are dropped and
    the fact recorded; a depth of at least the word length makes the
    highest weight coefficient exact.
    """

    def __init__(self, spec: AlgebraSpec, lam, depth: int):
        self.spec = spec
        self.lam = as_weight(spec, lam)
        self.depth = depth
        self.truncated = False
        self._cache = {}

    def _act(self, g, nu):
        key = (g, nu)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        spec = self.spec
        kind = spec.triangular[g]
        if kind == NEG and (not nu or g <= nu[0]):
            out = {(g,) + nu: ONE}
        elif not nu:
            if kind == CARTAN:
                out = {(): self.lam[spec.cartan_coord[g]]}
            else:
                out = {}
        else:
            b, rest = nu[0], nu[1:]
            out = {}
            for mu, c in self._act(g, rest).items():
                for tau, c2 in self._act(b, mu).items():
                    v = out.get(tau, ZERO) + c * c2
                    if v:
                        out[tau] = v
                    elif tau in out:
                        del out[tau]
            for h, c in spec.bracket(g, b):
                for tau, c2 in self._act(h, rest).items():
                    v = out.get(tau, ZERO) + c * c2
                    if v:
                        out[tau] = v
                    elif tau in out:
                        del out[tau]
        self._cache[key] = out
        return out

    def apply_word(self, word):
        """Apply matrix index pairs right to left to the highest vector."""
        state = {(): ONE}
        for i, j in reversed(list(word)):
            c, idx = self.spec.resolve(i, j)
            if idx is None:
                return {}
            new = {}
            for nu, cv in state.items():
                for tau, ct in self._act(idx, nu).items():
                    if len(tau) > self.depth:
                        self.truncated = True
                        continue
                    v = new.get(tau, ZERO) + c * cv * ct
                    if v:
                        new[tau] = v
                    elif tau in new:
                        del new[tau]
            state = new
        return state

    def highest_coefficient(self, word) -> Fraction:
        return self.apply_word(word).get((), ZERO)


def hw_coefficient(spec: AlgebraSpec, word, lam) -> Fraction:
    """Coefficient of the highest weight vector in word . v_lambda.

    Exact: the truncation depth is the word length, which intermediate
    monomials cannot exceed.
    """
    word = list(word)
    return VermaTruncation(spec, lam, len(word)).highest_coefficient(word)
