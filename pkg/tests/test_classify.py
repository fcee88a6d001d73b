from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from holosign.classify import (
    BOTTOM,
    THETA_TABLE,
    Tag,
    classify,
    degenerate_type,
    possible_signs,
    stability_precheck,
    theta_lookup,
    theta_words,
    unstable_example,
)
from holosign.errors import DegenerateCoefficient
from holosign.poly import Poly
from holosign.ratfunc import RatFunc
from holosign.recurrence import parse_word, shortest_period, values
from holosign.scalar import QuadraticNumber, quad

from conftest import CLOSED_FORM_PAIR, HALF, legendre_pair, x

LENGTHS = {1, 2, 3, 4, 6, 8, 12}


def test_fixture_types():
    assert classify(*legendre_pair(HALF)).label() == "theta-O-elliptic(3,1)"
    assert classify(*legendre_pair(Fraction(1))).tag is Tag.HYPERBOLIC
    assert classify(*CLOSED_FORM_PAIR).label() == "theta-O-elliptic(3,1)"
    assert classify(RatFunc(1), -x).tag is Tag.Q_OMEGA_ELLIPTIC
    assert classify(x + 1, x + 2).tag is Tag.INFTY_OMEGA_LOXODROMIC


def test_cubic_cases():
    assert classify(RatFunc(1), x**3).tag is Tag.INFTY_O_LOXODROMIC
    assert classify(RatFunc(1), -(x**3)).label() == "theta-O-elliptic(2,1)"


def test_boundary_of_hyperbolic_region():
    # R = -1/4 - 1/(16 x^2) exactly at the threshold is still hyperbolic
    R = Fraction(-1, 4) - 1 / (16 * x**2)
    assert classify(RatFunc(1), R).tag is Tag.HYPERBOLIC
    assert classify(RatFunc(1), R - 1 / (100 * x**2)).tag is Tag.Q_OMEGA_ELLIPTIC
    assert classify(RatFunc(1), RatFunc(Fraction(-1, 5))).alphas[0] == Fraction(-1, 5)


def test_zero_coefficients():
    with pytest.raises(DegenerateCoefficient):
        classify(RatFunc(0), RatFunc(1))
    assert degenerate_type(RatFunc(0), RatFunc(0)).label() == "degenerate(PQ)"


@st.composite
def coefficient(draw):
    num = Poly(draw(st.lists(st.integers(-5, 5), min_size=1, max_size=3)))
    assume(not num.is_zero())
    den = Poly([draw(st.integers(1, 4)), 1]) if draw(st.booleans()) else Poly([1])
    return RatFunc(num, den)


@given(coefficient(), coefficient(), st.integers(1, 5))
def test_shift_invariance(P, Q, c):
    assume(not (P * P.shift(-1)).is_zero())
    a, b = classify(P, Q), classify(P.shift(c), Q.shift(c))
    assert (a.tag, a.r, a.k) == (b.tag, b.r, b.k)


def test_theta_lookup_examples():
    assert theta_lookup(Fraction(-1)) == (3, 1)
    assert theta_lookup(Fraction(-1, 2)) == (4, 1)
    assert theta_lookup(Fraction(-1, 4)) is None
    assert theta_lookup(Fraction(-2, 7)) is None


def mp_fraction(q):
    return mpmath.mpf(q.numerator) / q.denominator


@pytest.mark.parametrize("alpha0", list(THETA_TABLE))
def test_theta_lookup_is_sound(alpha0):
    r, k = theta_lookup(alpha0)
    assert 0 < Fraction(k, r) < Fraction(1, 2)
    mpmath.mp.dps = 60
    if isinstance(alpha0, QuadraticNumber):
        value = mp_fraction(alpha0.a) + mp_fraction(alpha0.b) * mpmath.sqrt(alpha0.d)
    else:
        value = mp_fraction(alpha0)
    assert abs(4 * mpmath.cos(k * mpmath.pi / r) ** 2 * -value - 1) < mpmath.mpf(10) ** -50


def test_words_three_one():
    printed = ["+---++", "++---+", "+++---", "-+++--", "--+++-", "---+++"]
    assert theta_words(3, 1, True) == [parse_word(w) for w in printed]


def test_words_four_one():
    words = theta_words(4, 1, True)
    assert len(set(words)) == 8
    assert words[3] == parse_word("++++----")
    assert all(len(w) == 8 for w in words)


def test_words_two_one_length():
    assert {len(w) for w in theta_words(2, 1, True)} == {4}


@pytest.mark.parametrize("rk", sorted(set(THETA_TABLE.values())) + [(2, 1)])
def test_zero_letters(rk):
    r, k = rk
    for w in theta_words(r, k, True):
        assert 0 not in w
    for j, w in enumerate(theta_words(r, k, False)):
        for i, letter in enumerate(w):
            assert (letter == 0) == ((j - i * k) % r == 0)


def test_possible_signs_examples():
    hyp = classify(*legendre_pair(Fraction(1)))
    assert possible_signs(hyp) == {(1,), (-1,)}
    lox = classify(x + 1, x + 2)
    assert possible_signs(lox) == {(1,), (-1,), (1, -1), (-1, 1)}
    assert possible_signs(classify(RatFunc(1), -x)) == {BOTTOM}
    theta = classify(*CLOSED_FORM_PAIR)
    assert len(possible_signs(theta)) == 6
    assert len(possible_signs(theta, r_constant=True)) == 12


@st.composite
def rational_elliptic_pairs(draw):
    """Random pairs over the rationals whose ``R`` tends to a tabulated angle."""
    p = draw(st.fractions(min_value=Fraction(-3), max_value=3, max_denominator=4).filter(bool))
    if draw(st.booleans()):
        alpha0 = draw(st.sampled_from([Fraction(-1), Fraction(-1, 2), Fraction(-1, 3)]))
        c = draw(st.fractions(min_value=-1, max_value=5, max_denominator=6))
        d = draw(st.integers(1, 4))
        return RatFunc(p), alpha0 * p * p * (1 + c / ((x + d) * (x + d + 1)))
    b = draw(st.integers(1, 5))
    return RatFunc(p), -b * x**3 + draw(st.integers(-3, 3)) * x


@given(rational_elliptic_pairs())
def test_word_length_law(pair):
    P, Q = pair
    rtype = classify(P, Q)
    assert rtype.tag is Tag.THETA_O_ELLIPTIC
    constant = (Q / (P * P.shift(-1))).is_constant()
    for w in possible_signs(rtype, constant):
        assert len(shortest_period(w)) in LENGTHS
        # normalization may alternate the signs of an ultimately negative P
        flipped = shortest_period(tuple(s * (-1) ** i for i, s in enumerate(w * 2)))
        assert len(flipped) in LENGTHS


def test_precheck_examples():
    assert stability_precheck(x + 1, RatFunc(1)) == "AllStable"
    assert stability_precheck(x + 1, x + 2) == "Unknown"
    assert stability_precheck(RatFunc(1), RatFunc(1)) == "Unknown"
    assert stability_precheck(2 * x + 1, x + 3) == "AllStable"


def test_unstable_example():
    inst = unstable_example(x + 1, 1)
    assert inst.Q == x + 2 and inst.f0 == (1, -1)
    assert values(inst, 20) == [(-1) ** n for n in range(21)]
    other = unstable_example(x + 1, -1)
    assert other.Q == -x and values(other, 20) == [1] * 21
    with pytest.raises(ValueError):
        unstable_example(RatFunc(2), 1)
    with pytest.raises(ValueError):
        unstable_example(x - 2, 1)


@pytest.mark.parametrize(
    "alpha0, rk",
    [(quad(-1, HALF, 2), (8, 1)), (quad(-2, -1, 3), (12, 5)), (quad(Fraction(-3, 2), HALF, 5), (5, 1))],
)
def test_quadratic_theta_types(alpha0, rk):
    Q = alpha0 * (1 + 1 / (x * (x + 1) + 3))
    assert (classify(RatFunc(1), Q).r, classify(RatFunc(1), Q).k) == rk
