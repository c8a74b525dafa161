"""Command line interface emitting one JSON document per invocation.

Algebras are named by family and a single number: ``gl 3`` and ``sp 2``
take the rank, while ``o 5`` takes the matrix size so that its parity
can select the even or odd orthogonal family.  Weights are comma
separated rationals such as ``1,-1/2,0``.  Every command prints a JSON
object to stdout (or writes it with --json) with all rationals
rendered as exact fraction strings; exit status is 0 on success, 2
when certification fails, and 1 on a usage error.

The truncation order for series-based commands comes from --K when
given, else from the HWPOLY_K environment variable, else from each
operation's documented default.  --seed is accepted everywhere for
interface stability; no current command draws randomness.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import make_spec
from .howe import (check_conv_powers, check_divisibility_instance,
                   check_resolvent_transfer)
from .oracle import build_catalog_rep, build_irrep_gl, oracle_minpoly
from .polyrat import UniPoly, monic_lcm
from .shuffle import (decompose, minpoly_from_weight, shifted_weight,
                      shuffle_gl, shuffle_mirror)
from .verify import (CertificationError, NotMinimalError,
                     certified_minimal_polynomial, check_relative_formulas,
                     divisibility_poset, parity_classify, pp_diagnostic,
                     projected_resolvent)

_MIRROR_EPSILON = {"sp": Fraction(1), "o_even": Fraction(0),
                   "o_odd": Fraction(1, 2)}


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _parse_weight(text: str):
    if text == "":
        return ()
    try:
        return tuple(Fraction(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise _Usage(f"cannot parse weight {text!r}")


def _spec_for(family: str, num: int):
    if family == "gl":
        return make_spec("gl", num)
    if family == "sp":
        return make_spec("sp", num)
    if family == "o":
        if num < 2:
            raise _Usage("orthogonal size must be at least 2")
        return make_spec("o_even" if num % 2 == 0 else "o_odd", num // 2)
    raise _Usage(f"unknown family {family!r}")


def _resolve_K(args, fallback=None):
    if args.K is not None:
        return args.K
    env = os.environ.get("HWPOLY_K")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _Usage(f"HWPOLY_K must be an integer, got {env!r}")
    return fallback


def _s(x) -> str:
    return str(Fraction(x))


def _poly(q: UniPoly):
    return [_s(c) for c in q.coeffs]


def _roots(q: UniPoly):
    return [[_s(r), m] for r, m in q.rational_roots()]


def _decomposition_doc(dec):
    doc = {
        "kind": dec.kind,
        "sequence": [_s(x) for x in dec.sequence],
        "parts": [{"terms": [_s(t) for t in p.terms],
                   "origins": list(p.origins),
                   "mirror": p.mirror_id} for p in dec.parts],
        "parity": dec.parity,
        "epsilon": None if dec.epsilon is None else _s(dec.epsilon),
        "roots": [_s(r) for r in dec.roots()],
    }
    return doc


def _cmd_minpoly(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    if args.mode == "certified":
        q, _ = certified_minimal_polynomial(spec, lam, K=_resolve_K(args))
    else:
        q = minpoly_from_weight(spec, lam)
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "l": [_s(x) for x in shifted_weight(spec, lam)],
        "roots": _roots(q),
        "polynomial": _poly(q),
        "mode": args.mode,
        "certified": args.mode == "certified",
    }


def _cmd_shuffle(args):
    seq = _parse_weight(args.sequence)
    if args.family == "gl":
        dec = shuffle_gl(seq)
    elif args.family in _MIRROR_EPSILON:
        dec = shuffle_mirror(seq, _MIRROR_EPSILON[args.family])
    else:
        raise _Usage(f"unknown shuffle family {args.family!r}")
    return _decomposition_doc(dec)


def _cmd_certify(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    q, cert = certified_minimal_polynomial(spec, lam, K=_resolve_K(args))
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "polynomial": _poly(q),
        "roots": _roots(q),
        "certified": True,
        "witnesses": [{"root": _s(r), "entry": _s(lab), "residual": _s(res)}
                      for r, lab, res in cert.witnesses],
    }


def _cmd_resolvent(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    K = _resolve_K(args)
    entries = projected_resolvent(spec, lam, K=K)
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "K": K if K is not None else 2 * spec.N + 2,
        "entries": [{"entry": _s(lab), "num": _poly(num), "den": _poly(den)}
                    for lab, num, den in entries],
        "lcm": _poly(monic_lcm(den for _, _, den in entries)),
    }


def _cmd_relcheck(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    K = _resolve_K(args, 6)
    reports = check_relative_formulas(spec, lam, K=K)
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "K": K,
        "reports": [{"name": r.name, "residuals": [_s(x) for x in r.residuals],
                     "exact": r.exact} for r in reports],
    }


def _cmd_ppdiag(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    K = _resolve_K(args, 6)
    report = pp_diagnostic(spec, lam, K=K)
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "K": K,
        "name": report.name,
        "residuals": [_s(x) for x in report.residuals],
        "exact": report.exact,
    }


def _cmd_parity(args):
    spec = _spec_for(args.family, args.num)
    lam = _parse_weight(args.weight)
    if args.mode == "certified":
        q, _ = certified_minimal_polynomial(spec, lam, K=_resolve_K(args))
    else:
        q = minpoly_from_weight(spec, lam)
    return {
        "algebra": spec.label,
        "weight": [_s(x) for x in lam],
        "polynomial": _poly(q),
        "parity": parity_classify(spec, q, lam),
    }


def _cmd_oracle(args):
    spec = _spec_for(args.family, args.num)
    if args.rep in ("trivial", "defining"):
        rep = build_catalog_rep(spec, args.rep)
    elif args.family == "gl":
        lam = _parse_weight(args.rep)
        if any(x.denominator != 1 for x in lam):
            raise _Usage("gl oracle weights must be integers")
        rep = build_irrep_gl(tuple(int(x) for x in lam), args.num)
    else:
        raise _Usage("weight-built oracle modules exist for gl only")
    q = oracle_minpoly(rep)
    return {
        "algebra": spec.label,
        "rep": rep.name,
        "dim": rep.dim,
        "polynomial": _poly(q),
        "roots": _roots(q),
    }


def _cmd_howe(args):
    conv = check_conv_powers(args.n, args.k, args.rmax)
    transfer = check_resolvent_transfer(args.n, args.k, _resolve_K(args, 3))
    divis = []
    if args.n == 1:
        for d in range(args.dmax + 1):
            rep = check_divisibility_instance(1, args.k, d)
            divis.append({"d": d, "q": _poly(rep.q),
                          "q_prime": _poly(rep.q_prime),
                          "product": _poly(rep.product),
                          "divisible": rep.divisible})
    return {
        "n": args.n,
        "k": args.k,
        "conv": {"checks": conv.checks,
                 "failures": [list(f) for f in conv.failures],
                 "passed": conv.passed},
        "transfer": {"checks": transfer.checks,
                     "failures": [list(f) for f in transfer.failures],
                     "passed": transfer.passed},
        "divisibility": divis,
    }


def _cmd_poset(args):
    spec = _spec_for(args.family, args.num)
    weights = [_parse_weight(w) for w in args.weights.split(";") if w != ""]
    entries, edges = divisibility_poset(spec, weights)
    return {
        "algebra": spec.label,
        "entries": [{"weight": [_s(x) for x in w], "polynomial": _poly(q)}
                    for w, q in entries],
        "edges": [list(e) for e in edges],
    }


def _add_algebra(sub):
    sub.add_argument("family", choices=["gl", "sp", "o"])
    sub.add_argument("num", type=int)


def _add_common(sub):
    sub.add_argument("--K", type=int, default=None,
                     help="series truncation order")
    sub.add_argument("--json", metavar="PATH", default=None,
                     help="write the document to PATH instead of stdout")
    sub.add_argument("--seed", type=int, default=None,
                     help="reserved; no current command draws randomness")


def _build_parser() -> _Parser:
    p = _Parser(prog="hwpoly", description=__doc__.splitlines()[0])
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("minpoly", help="minimal polynomial from the weight")
    _add_algebra(s)
    s.add_argument("weight")
    s.add_argument("--mode", choices=["fast", "certified"], default="fast")
    _add_common(s)
    s.set_defaults(func=_cmd_minpoly)

    s = subs.add_parser("shuffle", help="decompose a shifted weight sequence")
    s.add_argument("family", choices=["gl", "sp", "o_even", "o_odd"])
    s.add_argument("sequence")
    _add_common(s)
    s.set_defaults(func=_cmd_shuffle)

    s = subs.add_parser("certify", help="certified minimal polynomial")
    _add_algebra(s)
    s.add_argument("weight")
    _add_common(s)
    s.set_defaults(func=_cmd_certify)

    s = subs.add_parser("resolvent", help="projected resolvent diagonal")
    _add_algebra(s)
    s.add_argument("weight")
    _add_common(s)
    s.set_defaults(func=_cmd_resolvent)

    s = subs.add_parser("relcheck", help="corank one restriction identities")
    _add_algebra(s)
    s.add_argument("weight")
    _add_common(s)
    s.set_defaults(func=_cmd_relcheck)

    s = subs.add_parser("ppdiag", help="trace series diagnostic (o and sp)")
    _add_algebra(s)
    s.add_argument("weight")
    _add_common(s)
    s.set_defaults(func=_cmd_ppdiag)

    s = subs.add_parser("parity", help="mirror parity of the minimal polynomial")
    _add_algebra(s)
    s.add_argument("weight")
    s.add_argument("--mode", choices=["fast", "certified"], default="fast")
    _add_common(s)
    s.set_defaults(func=_cmd_parity)

    s = subs.add_parser("oracle", help="matrix-model minimal polynomial")
    _add_algebra(s)
    s.add_argument("rep", help="'trivial', 'defining', or a gl weight")
    _add_common(s)
    s.set_defaults(func=_cmd_oracle)

    s = subs.add_parser("howe", help="dual pair transfer checks")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--rmax", type=int, default=3)
    s.add_argument("--dmax", type=int, default=3)
    _add_common(s)
    s.set_defaults(func=_cmd_howe)

    s = subs.add_parser("poset", help="divisibility among certified polynomials")
    _add_algebra(s)
    s.add_argument("weights", help="weights separated by ';'")
    _add_common(s)
    s.set_defaults(func=_cmd_poset)

    return p


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        doc = args.func(args)
    except _Usage as exc:
        print(f"hwpoly: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"hwpoly: {exc}", file=sys.stderr)
        return 1
    except (CertificationError, NotMinimalError) as exc:
        print(f"hwpoly: certification failure: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(doc, indent=2) + "\n"
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
