"""Certification of minimal polynomials and structural diagnostics.

The annihilation criterion drives everything here: a polynomial q kills
the simple highest weight module exactly when every diagonal entry of
q(M) has vanishing Harish-Chandra image at the highest weight.  Off
diagonal entries carry nonzero adjoint weight, so their projections
vanish identically and only the diagonal needs evaluating; the
projected diagonals of the powers of M are weight independent and
cached, which makes scanning many weights against one algebra cheap.

certified_minimal_polynomial starts from the shuffle candidate, checks
annihilation, trims any root whose removal still annihilates, and only
falls back to reconstructing the projected resolvent by rational
function recovery when the candidate fails outright.  The certificate
records zero residuals for q itself and, per distinct root, a witness
entry where dropping that root breaks annihilation.

The remaining functions compare engine series against closed forms:
the corank one restriction formulas for the resolvent, the Perelomov
Popov style trace generating function (reported, never asserted, since
it disagrees with the exact trace facts beyond first order), a parity
classifier for the evaluated diagonal of q(M), and a divisibility
poset over a batch of weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import AlgebraSpec, Family, as_weight, inner_spec, parabolic
from .enveloping import (
    UElement,
    evaluate_at_weight,
    project_hc,
    project_relative,
    restrict_corank_one,
)
from .genmatrix import generator_power, projected_diagonal, trace_prime
from .polyrat import (
    LaurentTrunc,
    UniPoly,
    monic_lcm,
    pade_reconstruct,
    series_of_rational,
)
from .shuffle import decompose

ZERO = Fraction(0)
ONE = Fraction(1)


class CertificationError(Exception):
    """The candidate polynomial does not annihilate the module."""

    def __init__(self, message, residuals=()):
        super().__init__(message)
        self.residuals = tuple(residuals)


class NotMinimalError(Exception):
    """A proper divisor of the candidate already annihilates."""

    def __init__(self, message, divisor):
        super().__init__(message)
        self.divisor = divisor


@dataclass(frozen=True)
class Certificate:
    """Annihilation residuals (all zero) plus per-root minimality witnesses.

    witnesses holds one (root, entry label, residual) triple for each
    distinct root of the polynomial: dropping that root leaves the
    recorded diagonal entry with the recorded nonzero residual.
    """

    weight: tuple
    polynomial: UniPoly
    residuals: tuple
    witnesses: tuple


@dataclass(frozen=True)
class DiagnosticReport:
    """Residual magnitudes of one identity, checked order by order."""

    name: str
    residuals: tuple

    @property
    def exact(self) -> bool:
        return all(not r for r in self.residuals)


def _magnitude(a) -> Fraction:
    if isinstance(a, UElement):
        return sum((abs(c) for c in a.terms.values()), ZERO)
    return abs(a)


def annihilation_residuals(spec: AlgebraSpec, q: UniPoly, lam):
    """Evaluated projection of each diagonal entry of q(M)."""
    lam = as_weight(spec, lam)
    out = []
    for pos, label in enumerate(spec.matrix_indices):
        total = ZERO
        for k, c in enumerate(q.coeffs):
            if c:
                total += c * evaluate_at_weight(
                    projected_diagonal(spec, k)[pos], lam)
        out.append((label, total))
    return tuple(out)


def annihilates(spec: AlgebraSpec, q: UniPoly, lam) -> bool:
    return all(not r for _, r in annihilation_residuals(spec, q, lam))


def certify_minimal(spec: AlgebraSpec, q: UniPoly, lam) -> Certificate:
    """Certificate that q is the minimal polynomial of M on L(lambda).

    Raises CertificationError when q fails to annihilate,
    NotMinimalError when some root can be dropped, and ValueError when
    q is not monic or does not split over the rationals.
    """
    lam = as_weight(spec, lam)
    if not q.is_monic():
        raise ValueError("candidate polynomial must be monic")
    q.linear_factorization()
    residuals = annihilation_residuals(spec, q, lam)
    bad = [(lab, r) for lab, r in residuals if r]
    if bad:
        raise CertificationError(
            f"{q} does not annihilate at weight {lam}", residuals)
    witnesses = []
    for root, _ in q.rational_roots():
        divisor = q // UniPoly.from_roots([root])
        dres = annihilation_residuals(spec, divisor, lam)
        hit = next(((lab, r) for lab, r in dres if r), None)
        if hit is None:
            raise NotMinimalError(
                f"divisor {divisor} still annihilates at weight {lam}",
                divisor)
        witnesses.append((root, hit[0], hit[1]))
    return Certificate(lam, q, residuals, tuple(witnesses))


def projected_resolvent(spec: AlgebraSpec, lam, K: "int | None" = None):
    """Diagonal of the evaluated projected resolvent, as reduced fractions.

    Returns (label, numerator, denominator) per diagonal entry, each
    recovered from the first K series coefficients with denominator
    degree at most N; off diagonal entries vanish identically and are
    not listed.  K defaults to 2N + 2, the least order guaranteeing a
    unique recovery at that degree bound.
    """
    lam = as_weight(spec, lam)
    if K is None:
        K = 2 * spec.N + 2
    out = []
    for pos, label in enumerate(spec.matrix_indices):
        tail = [evaluate_at_weight(projected_diagonal(spec, k)[pos], lam)
                for k in range(K)]
        series = LaurentTrunc(UniPoly.zero(), tail)
        num, den = pade_reconstruct(series, spec.N)
        out.append((label, num, den))
    return tuple(out)


def _shrink_to_minimal(spec, q, lam):
    shrunk = True
    while shrunk:
        shrunk = False
        for root, _ in q.rational_roots():
            divisor = q // UniPoly.from_roots([root])
            if annihilates(spec, divisor, lam):
                q = divisor
                shrunk = True
                break
    return q


def certified_minimal_polynomial(spec: AlgebraSpec, lam,
                                 K: "int | None" = None):
    """Minimal polynomial with its certificate.

    The shuffle candidate is certified directly when possible; if it
    fails to annihilate, the polynomial is rebuilt as the least common
    multiple of the projected resolvent denominators before repeating
    the certification.  Returns (polynomial, Certificate).
    """
    lam = as_weight(spec, lam)
    q = UniPoly.from_roots(decompose(spec, lam).roots())
    if not annihilates(spec, q, lam):
        entries = projected_resolvent(spec, lam, K)
        q = monic_lcm(den for _, _, den in entries)
        if not annihilates(spec, q, lam):
            raise CertificationError(
                f"resolvent denominator lcm {q} fails at weight {lam}",
                annihilation_residuals(spec, q, lam))
    q = _shrink_to_minimal(spec, q, lam)
    return q, certify_minimal(spec, q, lam)


def _corank_projection(spec):
    if spec.n >= 2:
        par = parabolic(spec, spec.n - 1)
        return lambda a: project_relative(a, par)
    return project_hc


def check_relative_formulas(spec: AlgebraSpec, lam, K: int = 6):
    """Corank one restriction formulas for the resolvent, order by order.

    Compares the restricted projection of the resolvent series of M
    against closed forms in the resolvent of the inner algebra, keeping
    the inner Cartan coordinates symbolic; only the outermost
    coordinate of lam enters.  Returns one DiagnosticReport per
    identity: the removed corner, the inner block, and (orthogonal and
    symplectic only) the opposite corner.
    """
    lam = as_weight(spec, lam)
    if spec.n < 1:
        raise ValueError("rank must be at least 1")
    gl = spec.family is Family.GL
    proj = _corank_projection(spec)
    inner = inner_spec(spec)
    outer = lam[-1] if gl else lam[0]
    # 1/(u - outer) for gl, 1/(u + outer) otherwise
    geom = [outer ** t if gl else (-outer) ** t for t in range(K)]
    corner_label = spec.n

    def restricted(entry_i, entry_j, k):
        ent = generator_power(spec, k)[entry_i, entry_j]
        return restrict_corank_one(proj(ent), outer)

    reports = []
    corner = []
    for m in range(1, K + 1):
        lhs = restricted(corner_label, corner_label, m - 1)
        corner.append(_magnitude(lhs - geom[m - 1]))
    reports.append(DiagnosticReport("corner", tuple(corner)))

    inner_labels = inner.matrix_indices
    inner_pow = [generator_power(inner, s) for s in range(K)]
    block = []
    for m in range(1, K + 1):
        worst = ZERO
        for i in inner_labels:
            for j in inner_labels:
                # A_s: coefficient of u^-s in the inner resolvent at u - 1
                a = [None] + [
                    sum((Fraction(comb(s - 1, r)) * inner_pow[r][i, j]
                         for r in range(s)), UElement.zero(inner))
                    for s in range(1, m + 1)]
                rhs = a[m]
                for t in range(1, m):
                    rhs = rhs - geom[t - 1] * a[m - t]
                worst = max(worst, _magnitude(restricted(i, j, m - 1) - rhs))
        block.append(worst)
    reports.append(DiagnosticReport("inner-block", tuple(block)))

    if not gl:
        c = lam[0] + 2 * spec.rho[0]
        s_series = [restricted(-spec.n, -spec.n, k) for k in range(K)]
        tr_series = [
            restrict_corank_one(proj(trace_prime(generator_power(spec, k))),
                                outer)
            for k in range(K - 1)]
        opp = [_magnitude(s_series[0] - ONE)]
        for m in range(1, K):
            lhs = s_series[m] - c * s_series[m - 1]
            if spec.family is Family.SP:
                rhs = -2 * geom[m - 1] - tr_series[m - 1]
            else:
                rhs = -tr_series[m - 1]
            opp.append(_magnitude(lhs - rhs))
        reports.append(DiagnosticReport("opposite-corner", tuple(opp)))
    return reports


def pp_diagnostic(spec: AlgebraSpec, lam, K: int = 6) -> DiagnosticReport:
    """Residuals of the closed trace generating function against the engine.

    The closed form is the Perelomov Popov style expression in the
    shifted weight; it reproduces neither of the exact low order trace
    facts beyond u^-1 in general, which is why this is a report rather
    than a certification step.  residuals[0] is the magnitude of the
    closed form's polynomial part (the engine series has none) and
    residuals[m] compares the u^-m coefficients for m = 1..K.
    """
    lam = as_weight(spec, lam)
    if spec.family is Family.GL:
        raise ValueError("trace diagnostic applies to o and sp only")
    engine = []
    for m in range(1, K + 1):
        total = ZERO
        for pos in range(len(spec.matrix_indices)):
            total += evaluate_at_weight(
                projected_diagonal(spec, m - 1)[pos], lam)
        engine.append(total)

    rho1 = spec.rho[0]
    shifted = [a + b for a, b in zip(lam, spec.rho)]
    p2 = UniPoly.one()
    p1 = UniPoly.one()
    vsq = UniPoly.x() * UniPoly.x()
    vshift = UniPoly.x().shift(-1)
    for li in shifted:
        p2 = p2 * (vsq - UniPoly((li * li,)))
        p1 = p1 * (vshift * vshift - UniPoly((li * li,)))
    v = UniPoly.x()
    half = UniPoly((Fraction(-1, 2), ONE))
    if spec.family is Family.O_ODD:
        num = v * p2 - vshift * (p2 - p1)
    else:
        eps2 = UniPoly((-2 * spec.epsilon, ONE))
        num = eps2 * (p2 - p1)
    den = half * p2
    series = series_of_rational(num.shift(-rho1), den.shift(-rho1), K)
    closed = [series.tail_coeff(m) for m in range(1, K + 1)]
    # residual 0 is the polynomial part, which the engine series lacks
    head = sum((abs(c) for c in series.poly.coeffs), ZERO)
    return DiagnosticReport(
        "trace-generating-function",
        (head,) + tuple(e - f for e, f in zip(engine, closed)))


def parity_classify(spec: AlgebraSpec, q: UniPoly, lam) -> str:
    """Mirror symmetry type of the evaluated projected diagonal of q(M).

    Compares the entry at i against the entry at -i for every positive
    label: "even" when they agree, "odd" when they are opposite (which
    forces the middle entry, if any, to vanish), "mixed" otherwise.
    Ties prefer "even".  The comparison happens after projection and
    evaluation, so it classifies the diagonal modulo the annihilator
    rather than the operator itself.
    """
    lam = as_weight(spec, lam)
    if spec.family is Family.GL:
        raise ValueError("parity applies to o and sp only")
    d = dict(annihilation_residuals(spec, q, lam))
    even = all(d[i] == d[-i] for i in range(1, spec.n + 1))
    odd = all(d[i] == -d[-i] for i in range(1, spec.n + 1)) \
        and d.get(0, ZERO) == 0
    if even:
        return "even"
    if odd:
        return "odd"
    return "mixed"


def divisibility_poset(spec: AlgebraSpec, weights):
    """Certified minimal polynomials of a weight batch, with divisibility.

    Duplicate weights collapse to their first occurrence.  Returns
    (entries, edges): entries is a tuple of (weight, polynomial) and
    edges contains (a, b) exactly when entries[a] divides entries[b],
    a != b.
    """
    entries = []
    seen = set()
    for w in weights:
        w = as_weight(spec, w)
        if w in seen:
            continue
        seen.add(w)
        entries.append((w, certified_minimal_polynomial(spec, w)[0]))
    edges = []
    for a, (_, qa) in enumerate(entries):
        for b, (_, qb) in enumerate(entries):
            if a != b and qa.divides(qb):
                edges.append((a, b))
    return tuple(entries), tuple(edges)
