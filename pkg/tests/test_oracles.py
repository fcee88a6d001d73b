from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from holosign.oracles import (
    binom_cube_sum,
    empirical_sign_period,
    explicit_solution_ex,
    legendre_value,
)
from holosign.ratfunc import RatFunc
from holosign.recurrence import HolonomicInstance, values
from holosign.scalar import quad
from holosign.ultsign import Halted, ultimate_sign

from conftest import BINOMIAL_CUBE_PAIR, CLOSED_FORM_PAIR, HALF, ROOT_HALF, legendre_pair, x


def test_legendre_examples():
    assert legendre_value(HALF, 0) == 1
    assert legendre_value(HALF, 1) == HALF
    assert legendre_value(HALF, 2) == Fraction(-1, 8)


@pytest.mark.parametrize("t", [HALF, Fraction(1), Fraction(2), ROOT_HALF])
def test_legendre_satisfies_recurrence(t):
    inst = HolonomicInstance(*legendre_pair(t), (1, t))
    assert values(inst, 30) == [legendre_value(t, n) for n in range(31)]


def test_binomial_cube_examples():
    assert [binom_cube_sum(n) for n in range(3)] == [0, -1, -6]
    inst = HolonomicInstance(*BINOMIAL_CUBE_PAIR, (0, -1))
    assert values(inst, 40) == [binom_cube_sum(n) for n in range(41)]


def test_explicit_solution_examples():
    assert explicit_solution_ex((1, 0), 3) == Fraction(-9, 2)
    assert explicit_solution_ex((0, 1), 4) == -2


@given(st.tuples(st.fractions(-10, 10, max_denominator=9), st.fractions(-10, 10, max_denominator=9)))
def test_explicit_solution_matches_iteration(f0):
    vals = values(HolonomicInstance(*CLOSED_FORM_PAIR, f0), 60)
    assert vals == [explicit_solution_ex(f0, n) for n in range(61)]


def test_period_examples():
    rep = empirical_sign_period(HolonomicInstance(*CLOSED_FORM_PAIR, (1, 0)), 300)
    assert rep.word == (1, 1, -1, -1, -1, 1)
    assert empirical_sign_period(HolonomicInstance(RatFunc(1), -x, (1, 1)), 3000).word is None
    zero = empirical_sign_period(HolonomicInstance(*CLOSED_FORM_PAIR, (0, 0)), 200)
    assert zero.word == (0,) and zero.stabilized_at == 0


def test_period_window_contract():
    inst = HolonomicInstance(*CLOSED_FORM_PAIR, (1, 0))
    with pytest.raises(ValueError):
        empirical_sign_period(inst, 100, window=50)
    with pytest.raises(ValueError):
        empirical_sign_period(inst, 96, window=96)


pairs = st.sampled_from(
    [CLOSED_FORM_PAIR, legendre_pair(HALF), legendre_pair(Fraction(3, 2)), (x + 1, x + 3), (RatFunc(1), RatFunc(Fraction(-1, 5)))]
)


@given(pairs, st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(lambda v: v != (0, 0)))
@settings(max_examples=200)
def test_empirical_period_agrees_with_halting(pair, f0):
    inst = HolonomicInstance(*pair, f0)
    out = ultimate_sign(inst)
    if not isinstance(out, Halted):
        return
    rep = empirical_sign_period(inst, max(10 * out.N, 300))
    assert rep.word == out.word
    assert rep.stabilized_at == out.N


def test_quadratic_legendre_value():
    assert legendre_value(ROOT_HALF, 2) == Fraction(3, 2) * ROOT_HALF**2 - HALF
    assert legendre_value(ROOT_HALF, 1) == quad(0, HALF, 2)
