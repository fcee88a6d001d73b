from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holosign.errors import MixedRadicals, NotProperAtInfinity, PoleAtPoint
from holosign.poly import NEG_INF, Poly, poly_gcd, positive_tail_start
from holosign.ratfunc import (
    RatFunc,
    X,
    asymptotic_sign,
    compose_affine,
    degree_theta,
    eval_at_integer,
    eventual_compare,
    eventual_integer_sign,
    eventual_monotonicity,
    max_nat_root_or_pole,
    series_at_infinity,
)
from holosign.scalar import QuadraticNumber, quad, rational_bounds, sign, sqrt_scalar

x = X
small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicands = st.sampled_from([2, 3, 5, 6, 7])


@st.composite
def quadratics(draw, d=None):
    d = d or draw(radicands)
    return quad(draw(small), draw(small), d)


@st.composite
def polys(draw, max_degree=3):
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=max_degree + 1))
    return Poly(coeffs)


@st.composite
def ratfuncs(draw, max_degree=3):
    num = draw(polys(max_degree))
    den = draw(polys(max_degree).filter(lambda p: not p.is_zero()))
    return RatFunc(num, den)


# -- scalars ---------------------------------------------------------------

def test_quad_collapses_to_rational():
    assert quad(3, 0, 2) == 3 and isinstance(quad(3, 0, 2), Fraction)
    assert sqrt_scalar(4) == 2
    assert sqrt_scalar(8) == quad(0, 2, 2)


def test_sqrt_squares_back():
    r = sqrt_scalar(2)
    assert r * r == 2
    assert 1 / r == r / 2


@given(quadratics(d=2), quadratics(d=2))
def test_field_axioms(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@given(quadratics(), quadratics())
def test_sign_trichotomy_and_multiplicativity(a, b):
    if radicand(a) and radicand(b) and radicand(a) != radicand(b):
        return
    s = sign(a)
    assert [s > 0, s == 0, s < 0].count(True) == 1
    assert sign(a * b) == sign(a) * sign(b)


def radicand(v):
    return v.d if isinstance(v, QuadraticNumber) else 0


@given(quadratics())
def test_rational_bounds_bracket_value(a):
    lo, hi = rational_bounds(a, 40)
    assert lo <= a <= hi
    width = abs(a.b) if isinstance(a, QuadraticNumber) else 0
    assert hi - lo <= width * Fraction(1, 2**40)


def test_mixed_radicals_rejected():
    with pytest.raises(MixedRadicals):
        sqrt_scalar(2) + sqrt_scalar(3)


# -- polynomials ----------------------------------------------------------

@given(polys(), polys().filter(lambda p: not p.is_zero()))
def test_divmod_reconstructs(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys(), polys(), polys(2).filter(lambda p: p.degree >= 1))
def test_gcd_finds_common_factor(a, b, g):
    if a.is_zero() or b.is_zero():
        return
    h = poly_gcd(a * g, b * g)
    assert ((a * g) % h).is_zero() and ((b * g) % h).is_zero()
    assert (h % g.monic()).is_zero()


@given(st.lists(st.integers(0, 60), min_size=1, max_size=4), st.integers(1, 5))
def test_natural_roots_of_products(roots, lead):
    p = Poly([lead])
    for r in roots:
        p = p * Poly([-r, 1])
    assert sorted(p.natural_roots()) == sorted(set(roots))


def test_natural_roots_large():
    p = Poly([-123457, 1]) * Poly([5, 0, 1])
    assert p.natural_roots() == [123457]


@given(polys(4).filter(lambda p: p.degree >= 1))
def test_positive_tail_start_is_a_witness(p):
    m = positive_tail_start(p)
    s = sign(p.lc)
    for n in range(m, m + 40):
        assert sign(p(n)) in (0, s)


def test_degree_sentinel():
    assert degree_theta(RatFunc(0)) == NEG_INF
    assert degree_theta(x**3) == 3
    assert degree_theta((x + 2) / (x + 1)) == 0


# -- rational functions -------------------------------------------------------

def test_eval_examples():
    assert eval_at_integer((x + 2) / (x + 1), 1) == Fraction(3, 2)
    assert eval_at_integer(-(x + 3) / (x + 1), 0) == -3
    R = -1 + 2 / (x**2 + 3 * x + 2)
    assert eval_at_integer(R, 2) == Fraction(-5, 6)
    with pytest.raises(PoleAtPoint):
        eval_at_integer(1 / (x - 2), 2)


def test_asymptotic_sign_examples():
    assert asymptotic_sign(-(x + 3) / (x + 1)) == -1
    assert asymptotic_sign((2 * x + 3) / (2 * (x + 2))) == 1
    assert asymptotic_sign(RatFunc(0)) == 0


def test_series_examples():
    assert series_at_infinity(-1 + 2 / (x**2 + 3 * x + 2), 3) == [-1, 0, 2]
    R = -1 - 1 / ((2 * x + 3) * (2 * x + 1))
    assert series_at_infinity(R, 3) == [-1, 0, Fraction(-1, 4)]
    assert series_at_infinity(RatFunc(5), 2) == [5, 0]
    with pytest.raises(NotProperAtInfinity):
        series_at_infinity(x, 2)


@given(ratfuncs(2))
def test_series_remainder_is_cubic(R):
    if R.is_zero() or degree_theta(R) > 0:
        return
    a0, a1, a2 = series_at_infinity(R, 3)
    rest = (R - a0 - a1 / x - a2 / x**2) * x**3
    assert degree_theta(rest) <= 0


def test_max_nat_root_or_pole_examples():
    assert max_nat_root_or_pole((x + 2) / (x + 1), -(x + 3) / (x + 1)) is None
    assert max_nat_root_or_pole(x - 3, RatFunc(1)) == 3
    assert max_nat_root_or_pole((x - 2) * (x - 5), x - 4) == 5


def test_compose_affine_examples():
    assert compose_affine(x, 2, 3) == 2 * x + 3
    assert compose_affine(x**2, 3, 0) == 9 * x**2
    assert compose_affine((x + 1) / x, 2, 1) == (2 * x + 2) / (2 * x + 1)


@given(ratfuncs(2), st.integers(1, 4), st.integers(0, 5), st.integers(0, 5))
def test_compose_affine_chains(R, tau, N, M):
    assert compose_affine(compose_affine(R, tau, N), 1, M) == compose_affine(R, tau, tau * M + N)


def test_eventual_compare_examples():
    rel, N = eventual_compare(1 / x, RatFunc(0))
    assert rel == ">" and N >= 1
    assert eventual_compare(x, x) == ("=", 0)
    G0 = Fraction(1, 4) + 1 / (16 * x**2) - 1 / x**3
    assert eventual_compare(1 - 2 / (x**2 + 3 * x + 2), G0)[0] == ">"


@given(ratfuncs(3))
def test_eventual_sign_holds_past_bound(R):
    if R.is_zero():
        return
    s, N = eventual_integer_sign(R)
    assert s == asymptotic_sign(R)
    for n in range(N, N + 50):
        assert sign(eval_at_integer(R, n)) == s


def test_monotonicity_examples():
    assert eventual_monotonicity(-1 + 2 / (x**2 + 3 * x + 2))[0] == "decreasing"
    assert eventual_monotonicity(-1 - 1 / ((2 * x + 3) * (2 * x + 1)))[0] == "increasing"
    assert eventual_monotonicity(RatFunc(7))[0] == "constant"


def test_ratfunc_is_reduced():
    R = (x**2 - 1) / (x - 1)
    assert R == x + 1 and R.den == Poly([1])


def test_quadratic_coefficients():
    r = sqrt_scalar(2)
    R = (2 * x + 3) * (1 / r) / (x + 2)
    assert R.radicand() == 2
    assert R(0) == quad(0, Fraction(3, 4), 2)
