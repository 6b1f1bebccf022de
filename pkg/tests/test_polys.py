import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from arcwalk.polys import (
    PolynomialError,
    RatPoly,
    poly_divides,
    poly_gcd,
    poly_lcm,
    squarefree_analysis,
)

X = RatPoly.x()


def test_trailing_zeros_stripped():
    assert RatPoly((1, 2, 0, 0)) == RatPoly((1, 2))
    assert RatPoly((0,)).is_zero


def test_degree_and_monic():
    assert RatPoly.zero().degree == -1
    assert (X**3).degree == 3
    assert (X**3).is_monic
    assert not (2 * X).is_monic
    assert (2 * X).monic() == X


def test_arithmetic():
    p = (X - RatPoly.one()) * (X + RatPoly.one())
    assert p == X**2 - RatPoly.one()
    q, r = divmod(p, X - RatPoly.one())
    assert q == X + RatPoly.one()
    assert r.is_zero


def test_division_by_zero_poly():
    with pytest.raises(PolynomialError):
        divmod(X, RatPoly.zero())


def test_evaluate():
    p = RatPoly((2, 1, 1))  # x^2 + x + 2
    assert p.evaluate(2) == mpq(8)
    assert p.evaluate(mpq(1, 2)) == mpq(11, 4)


def test_derivative():
    assert (X**3 + 2 * X).derivative() == 3 * X**2 + RatPoly((2,))


def test_gcd_lcm():
    a = (X - RatPoly.one()) ** 2 * (X + RatPoly.one())
    b = (X - RatPoly.one()) * (X + RatPoly.one()) ** 2
    g = poly_gcd(a, b)
    assert g == (X - RatPoly.one()) * (X + RatPoly.one())
    assert poly_lcm(a, b) == (X - RatPoly.one()) ** 2 * (X + RatPoly.one()) ** 2


def test_poly_divides():
    assert poly_divides(X - RatPoly.one(), X**2 - RatPoly.one())
    assert not poly_divides(RatPoly((2, 0, 1)), RatPoly((2, 1, 1)))
    with pytest.raises(PolynomialError):
        poly_divides(RatPoly.zero(), X)


def test_squarefree_analysis():
    ok, rep = squarefree_analysis(X**4 - RatPoly.one())
    assert ok and rep == RatPoly.one()
    ok, rep = squarefree_analysis(X**2)
    assert not ok and rep == X


def test_squarefree_rejects_zero_and_nonmonic():
    with pytest.raises(PolynomialError):
        squarefree_analysis(RatPoly.zero())
    with pytest.raises(PolynomialError):
        squarefree_analysis(2 * X)


def test_parse_coefficients():
    assert RatPoly.parse_coefficients("2,1,1") == RatPoly((2, 1, 1))
    assert RatPoly.parse_coefficients("1/2, 1") == RatPoly((mpq(1, 2), 1))
    with pytest.raises(PolynomialError):
        RatPoly.parse_coefficients("1,,2")


def test_coefficient_strings():
    p = RatPoly((mpq(1, 2), -1))
    assert p.coefficient_strings() == ["1/2", "-1/1"]


def test_str():
    assert str(RatPoly((2, 1, 1))) == "x^2 + x + 2"
    assert str(RatPoly((-72, -72, -59, -39, -14, -2, 1, 1))).startswith("x^7 + x^6")
    assert str(RatPoly.zero()) == "0"
    assert str(-X) == "-x"


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-9, 9), max_size=6),
    st.lists(st.integers(-9, 9), max_size=6),
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
)
def test_divmod_property(a, b, d):
    p, q, div = RatPoly(a), RatPoly(b), RatPoly(d)
    if div.is_zero:
        return
    quot, rem = divmod(p * div + q, div)
    assert quot * div + rem == p * div + q
    assert rem.degree < div.degree


@settings(max_examples=60, deadline=None)
@given(st.integers(-5, 5), st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_repeated_root_detected(a, rest):
    # (x - a)^2 * r has gcd with its derivative divisible by (x - a).
    r = RatPoly(rest + [1])
    factor = X - RatPoly((a,))
    p = factor**2 * r
    g = poly_gcd(p, p.derivative())
    assert poly_divides(factor, g)


def test_pickle_roundtrip():
    import pickle

    p = RatPoly((mpq(1, 2), -1, 3))
    assert pickle.loads(pickle.dumps(p)) == p


def test_distinct_integer_roots_squarefree():
    p = RatPoly.from_roots([0, 1, -2, 5])
    assert poly_gcd(p, p.derivative()) == RatPoly.one()
