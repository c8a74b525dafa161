"""Dense exact linear algebra over the rationals.

Small kit shared by the series reconstruction and the matrix oracles:
fraction-valued row reduction with optional augmentation, an exact
solver, and a few matrix helpers.  Everything copies its input rows,
nothing here mutates caller data.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), ZERO) for row in a]


def mat_mul(a, b):
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for k, c in enumerate(row):
            if c:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += c * brow[j]
        out.append(acc)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


class Echelon:
    """Incremental reduced row echelon form over Q.

    The first `width` columns take part in pivoting; `aug` extra columns
    are carried along and never pivoted on.  The augmentation lets
    callers track how inserted rows combine, which is what the Krylov
    annihilator extraction needs.
    """

    def __init__(self, width, aug=0):
        self.width = width
        self.aug = aug
        self.rows = []
        self.pivots = []
        self.last_residual = None

    def reduce(self, vec):
        """Return a copy of vec reduced against the current rows."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(len(v)):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def insert(self, vec):
        """Reduce vec and adjoin it when independent.

        Returns the new pivot column, or None when vec lies in the span
        of the inserted rows; the reduced row (augmentation included) is
        then available as last_residual.
        """
        v = self.reduce(vec)
        piv = None
        for j in range(self.width):
            if v[j]:
                piv = j
                break
        self.last_residual = v
        if piv is None:
            return None
        scale = v[piv]
        v = [x / scale for x in v]
        for row in self.rows:
            c = row[piv]
            if c:
                for j in range(len(v)):
                    if v[j]:
                        row[j] -= c * v[j]
        k = 0
        while k < len(self.pivots) and self.pivots[k] < piv:
            k += 1
        self.rows.insert(k, v)
        self.pivots.insert(k, piv)
        return piv

    def coordinates(self, vec):
        """Coordinates of vec in the row span, or None if outside it.

        Rows are in reduced form, so the coordinate along each row is
        just the entry of vec at that row's pivot column.
        """
        v = self.reduce(vec)
        if any(v[j] for j in range(self.width)):
            return None
        return [vec[p] for p in self.pivots]


def solve_with_rank(a, b):
    """Solve a x = b exactly by Gauss-Jordan elimination.

    Returns (solution, nfree).  solution is None when the system is
    inconsistent; otherwise free variables are set to zero.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        s = aug[r][c]
        aug[r] = [x / s for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None, n - r
    sol = [ZERO] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    return sol, n - r
