import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

from arcwalk.graphs import Graph, default_arc_system
from arcwalk.linalg import (
    LinearAlgebraError,
    RatMatrix,
    format_rational,
    min_poly,
    parse_rational,
    poly_eval_matrix,
    rank,
    rank_and_kernel,
    row_space_basis,
)
from arcwalk.polys import RatPoly, poly_divides
from arcwalk.subspaces import build_incidences
from arcwalk.walks import build_walk_operators

from oracles import charpoly_cofactor, fraction_rank_and_nullity

C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_format_and_parse_rational():
    assert format_rational(mpq(3, 6)) == "1/2"
    assert format_rational(2) == "2/1"
    assert parse_rational("-4/6") == mpq(-2, 3)
    with pytest.raises(LinearAlgebraError):
        parse_rational("nope")


class TestRatMatrix:
    def test_shape_validation(self):
        with pytest.raises(LinearAlgebraError):
            RatMatrix(2, 2, [[1, 2]])

    def test_mul_identity(self):
        m = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert m * RatMatrix.identity(2) == m
        assert RatMatrix.identity(2) * m == m

    def test_scalar_and_vector(self):
        m = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert (m * mpq(1, 2)).data[0] == [mpq(1, 2), mpq(1)]
        assert m.apply([1, 1]) == [mpq(3), mpq(7)]

    def test_stacking(self):
        a = RatMatrix.from_rows([[1, 2]])
        b = RatMatrix.from_rows([[3, 4]])
        assert RatMatrix.vstack(a, b).data == [[1, 2], [3, 4]]
        assert RatMatrix.hstack(a, b).data == [[1, 2, 3, 4]]

    def test_transpose(self):
        m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.T.T == m
        assert m.T.data == [[1, 4], [2, 5], [3, 6]]


class TestRankAndKernel:
    def test_identity(self):
        r, ker = rank_and_kernel(RatMatrix.identity(3))
        assert r == 3
        assert ker.cols == 0

    def test_incidence_ranks_c4(self):
        bundle = build_incidences(C4, default_arc_system(C4))
        assert rank(bundle.B) == 3  # n - b = 4 - 1
        assert rank(bundle.N) == 3  # n - c = 4 - 1

    def test_kernel_annihilates_and_free_positions(self):
        m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
        r, ker = rank_and_kernel(m)
        assert r == 1
        assert ker.cols == 2
        assert (m * ker).is_zero()
        # standard free-variable vectors carry a unit in their own slot
        free_rows = [1, 2]
        for j, fr in enumerate(free_rows):
            assert ker[fr, j] == 1

    def test_rank_nullity_random(self):
        rng = random.Random(7)
        for _ in range(100):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            data = [
                [mpq(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
                for _ in range(rows)
            ]
            m = RatMatrix(rows, cols, data)
            r, ker = rank_and_kernel(m)
            assert r + ker.cols == cols
            assert ker.cols == 0 or (m * ker).is_zero()
            oracle_rank, oracle_nullity = fraction_rank_and_nullity(
                [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in data],
                cols,
            )
            assert (r, ker.cols) == (oracle_rank, oracle_nullity)

    def test_row_space_basis(self):
        m = RatMatrix.from_rows([[1, 2], [2, 4], [0, 1]])
        basis = row_space_basis(m)
        assert basis.rows == 2


class TestMinPoly:
    def test_zero_matrix(self):
        assert min_poly(RatMatrix.zeros(2, 2)) == RatPoly.x()

    def test_identity_matrix(self):
        assert min_poly(RatMatrix.identity(3)) == RatPoly((-1, 1))

    def test_non_square_rejected(self):
        with pytest.raises(LinearAlgebraError):
            min_poly(RatMatrix.zeros(2, 3))

    def test_nilpotent_from_path(self):
        t = build_walk_operators(P3).T
        assert not t.is_zero()
        assert (t * t).is_zero()
        assert min_poly(t) == RatPoly((0, 0, 1))

    def test_rational_entries(self):
        m = RatMatrix.from_rows([[mpq(1, 2), 0], [0, mpq(1, 3)]])
        p = min_poly(m)
        assert p == RatPoly((mpq(1, 6), mpq(-5, 6), 1))
        assert poly_eval_matrix(p, m).is_zero()

    def test_annihilation_and_charpoly_division(self, small_population):
        rng = random.Random(3)
        picked = [g for g in small_population if 1 <= g.m <= 6]
        rng.shuffle(picked)
        for g in picked[:25]:
            t = build_walk_operators(g).T
            p = min_poly(t)
            assert poly_eval_matrix(p, t).is_zero()
            assert p.is_monic
            # independent oracle: characteristic polynomial by memoized
            # cofactor expansion over Fractions (matrices up to 12x12)
            entries = [[Fraction(int(x)) for x in row] for row in t.data]
            cp = RatPoly([mpq(c.numerator, c.denominator) for c in charpoly_cofactor(entries)])
            assert poly_divides(p, cp)

    def test_minimality_against_divisors(self):
        # For a small companion-type matrix the minimal polynomial must not
        # be annihilated by any proper monic divisor degree.
        m = RatMatrix.from_rows([[0, 1], [1, 0]])
        assert min_poly(m) == RatPoly((-1, 0, 1))
