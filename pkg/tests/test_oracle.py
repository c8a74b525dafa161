"""Finite dimensional oracles: explicit modules, Krylov, truncated Verma."""

import random
from fractions import Fraction

import pytest

from hwpoly.algebra import make_spec
from hwpoly.enveloping import hc_evaluate, pbw_normalize
from hwpoly.linalg import mat_mul, mat_sub
from hwpoly.oracle import (
    VermaTruncation,
    build_catalog_rep,
    build_irrep_gl,
    hw_coefficient,
    oracle_minpoly,
    weyl_dimension_gl,
)
from hwpoly.polyrat import UniPoly
from hwpoly.shuffle import minpoly_from_weight


def assert_bracket_fidelity(rep):
    spec = rep.spec
    for a, (i, j) in enumerate(spec.gens):
        for b, (k, l) in enumerate(spec.gens):
            lhs = mat_sub(mat_mul(rep.mats[a], rep.mats[b]),
                          mat_mul(rep.mats[b], rep.mats[a]))
            rhs = [[Fraction(0)] * rep.dim for _ in range(rep.dim)]
            for h, c in spec.bracket(a, b):
                for r in range(rep.dim):
                    for s in range(rep.dim):
                        rhs[r][s] += c * rep.mats[h][r][s]
            assert lhs == [list(r) for r in rhs], (spec.label, (i, j), (k, l))


class TestCatalogReps:
    def test_trivial_minpoly(self):
        for family, n in [("gl", 3), ("sp", 2), ("o_odd", 1), ("o_even", 2)]:
            rep = build_catalog_rep(make_spec(family, n), "trivial")
            assert oracle_minpoly(rep) == UniPoly.x()

    def test_defining_fidelity(self):
        for family, n in [("gl", 2), ("sp", 1), ("sp", 2),
                          ("o_odd", 1), ("o_even", 2)]:
            assert_bracket_fidelity(build_catalog_rep(make_spec(family, n),
                                                      "defining"))

    def test_defining_gl_minpoly(self):
        for n in (2, 3):
            rep = build_catalog_rep(make_spec("gl", n), "defining")
            assert oracle_minpoly(rep) == UniPoly.from_roots([0, n])

    def test_defining_sp1_minpoly(self):
        rep = build_catalog_rep(make_spec("sp", 1), "defining")
        assert oracle_minpoly(rep) == UniPoly.from_roots([-1, 3])

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            build_catalog_rep(make_spec("gl", 2), "adjoint")


class TestIrrepGL:
    def test_dimensions(self):
        assert build_irrep_gl((1, 0), 2).dim == 2
        assert build_irrep_gl((1, 1), 2).dim == 1
        assert build_irrep_gl((2, 0), 2).dim == 3
        assert build_irrep_gl((1, 1, 0), 3).dim == 3
        assert build_irrep_gl((2, 1, 0), 3).dim == 8

    def test_weyl_dimension(self):
        assert weyl_dimension_gl((3, 1)) == 3
        assert weyl_dimension_gl((2, 1, 0)) == 8

    def test_determinant_rep(self):
        rep = build_irrep_gl((1, 1), 2)
        spec = rep.spec
        assert rep.generator_matrix(1, 1) == [[1]]
        assert rep.generator_matrix(2, 2) == [[1]]
        assert rep.generator_matrix(1, 2) == [[0]]
        assert oracle_minpoly(rep) == UniPoly.from_roots([1])
        assert minpoly_from_weight(spec, (1, 1)) == UniPoly.from_roots([1])

    def test_bracket_fidelity(self):
        for lam, n in [((2, 0), 2), ((2, 1), 2), ((1, 1, 0), 3),
                       ((2, 1, 0), 3)]:
            assert_bracket_fidelity(build_irrep_gl(lam, n))

    def test_degree_trace(self):
        for lam, n in [((2, 1), 2), ((1, 1, 1), 3)]:
            rep = build_irrep_gl(lam, n)
            tr = sum(rep.generator_matrix(i, i)[a][a]
                     for i in range(1, n + 1) for a in range(rep.dim))
            assert tr == sum(lam) * rep.dim

    def test_minpoly_matches_shuffle(self):
        grid2 = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1)]
        for lam in grid2:
            spec = make_spec("gl", 2)
            assert oracle_minpoly(build_irrep_gl(lam, 2)) == \
                minpoly_from_weight(spec, lam)
        for lam in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0)]:
            spec = make_spec("gl", 3)
            assert oracle_minpoly(build_irrep_gl(lam, 3)) == \
                minpoly_from_weight(spec, lam)

    def test_contract_errors(self):
        with pytest.raises(ValueError):
            build_irrep_gl((0, 1), 2)
        with pytest.raises(ValueError):
            build_irrep_gl((2, -1), 2)
        with pytest.raises(ValueError):
            build_irrep_gl((5, 0), 2)
        with pytest.raises(ValueError):
            build_irrep_gl((1, 0), 3)


class TestVerma:
    def test_lowering_then_raising(self):
        spec = make_spec("gl", 2)
        assert hw_coefficient(spec, [(1, 2), (2, 1)], (3, 1)) == 2
        assert hw_coefficient(spec, [(2, 1), (1, 2)], (3, 1)) == 0

    def test_cartan_word(self):
        spec = make_spec("gl", 2)
        assert hw_coefficient(spec, [(1, 1), (1, 1)], (Fraction(1, 2), 0)) \
            == Fraction(1, 4)
        assert hw_coefficient(spec, [], (5, 7)) == 1

    def test_sp1_pairing(self):
        spec = make_spec("sp", 1)
        assert hw_coefficient(spec, [(-1, 1), (1, -1)], (5,)) == 20

    def test_orthogonal_zero_pair(self):
        spec = make_spec("o_odd", 1)
        assert hw_coefficient(spec, [(1, -1), (0, 0)], (3,)) == 0

    def test_matches_engine_on_random_words(self):
        rng = random.Random(20260822)
        cases = [("gl", 2), ("gl", 3), ("sp", 1), ("sp", 2),
                 ("o_odd", 1), ("o_even", 2)]
        for family, n in cases:
            spec = make_spec(family, n)
            mi = spec.matrix_indices
            for _ in range(40):
                lam = tuple(Fraction(rng.randint(-6, 6), rng.choice([1, 2]))
                            for _ in range(n))
                word = [(rng.choice(mi), rng.choice(mi))
                        for _ in range(rng.randint(0, 4))]
                direct = hw_coefficient(spec, word, lam)
                engine = hc_evaluate(pbw_normalize(spec, word), lam)
                assert direct == engine, (spec.label, lam, word)

    def test_truncation_flag(self):
        spec = make_spec("gl", 2)
        vt = VermaTruncation(spec, (3, 1), 0)
        assert vt.highest_coefficient([(1, 2), (2, 1)]) == 0
        assert vt.truncated
        exact = VermaTruncation(spec, (3, 1), 2)
        assert exact.highest_coefficient([(1, 2), (2, 1)]) == 2
        assert not exact.truncated
