from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from holosign.classify import Tag, classify, possible_signs, r_function, unstable_example
from holosign.errors import ContractViolation
from holosign.ratfunc import RatFunc
from holosign.recurrence import HolonomicInstance, shortest_period, sign_sequence, values
from holosign.scalar import quad
from holosign.ultsign import (
    Budget,
    BudgetExhausted,
    Halted,
    Hint,
    NoUltimateSign,
    ZeroSequence,
    certificate_spot_check,
    hyperbolic_start_index,
    make_plan,
    ultimate_sign,
    ultimate_sign_with_hint,
)

from conftest import BINOMIAL_CUBE_PAIR, CLOSED_FORM_PAIR, HALF, legendre_pair, x

LENGTHS = {1, 2, 3, 4, 6, 8, 12}
BUDGET = Budget(20_000)


@st.composite
def sign_pairs(draw):
    """Coefficient pairs of every type that admits stable ultimate signs."""
    family = draw(st.sampled_from(["hyperbolic", "legendre", "theta", "loxodromic", "fixture"]))
    if family == "hyperbolic":
        c = draw(st.fractions(min_value=Fraction(-6, 25), max_value=Fraction(-1, 100), max_denominator=100))
        return RatFunc(1), RatFunc(c)
    if family == "legendre":
        t = draw(st.sampled_from([Fraction(1), Fraction(3, 2), Fraction(-2), Fraction(5, 4)]))
        return legendre_pair(t)
    if family == "theta":
        alpha0 = draw(st.sampled_from([Fraction(-1), Fraction(-1, 2), Fraction(-1, 3)]))
        p = draw(st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3)]))
        c = draw(st.fractions(min_value=-1, max_value=3, max_denominator=4))
        d = draw(st.integers(1, 3))
        return RatFunc(p), alpha0 * p * p * (1 + c / ((x + d) * (x + d + 1)))
    if family == "loxodromic":
        a = draw(st.integers(1, 4))
        b = draw(st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4))
        cubic = draw(st.booleans())
        return x + a, b * ((x**3 + 1) if cubic else (x + a + 1))
    return draw(st.sampled_from([CLOSED_FORM_PAIR, legendre_pair(HALF), BINOMIAL_CUBE_PAIR]))


initial = st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(lambda v: v != (0, 0))


def rotations(word):
    word = shortest_period(word)
    return {word[i:] + word[:i] for i in range(len(word))}


def admissible(rtype, constant):
    out = set()
    for w in possible_signs(rtype, constant):
        out |= rotations(w)
    return out


def inner_word(P, Q, word):
    """Undo the sign alternation that normalization applies to ultimately negative ``P``."""
    if make_plan(P, Q).flipped:
        word = tuple(s * (-1) ** i for i, s in enumerate(word * 2))
    return shortest_period(word)


@given(sign_pairs(), initial)
@settings(max_examples=200)
def test_halting_soundness_and_membership(pair, f0):
    P, Q = pair
    inst = HolonomicInstance(P, Q, f0)
    out = ultimate_sign(inst, BUDGET)
    if not isinstance(out, Halted):
        assert isinstance(out, BudgetExhausted)
        return
    signs = sign_sequence(inst, out.N, out.N + 2001)
    L = len(out.word)
    assert all(s == out.word[(out.N + i) % L] for i, s in enumerate(signs))
    rtype = classify(P, Q)
    assert inner_word(P, Q, out.word) in admissible(rtype, r_function(P, Q).is_constant())
    assert len(out.word) in LENGTHS
    if 0 in out.word:
        assert make_plan(P, Q).kind == "gap-degenerate"


@given(sign_pairs(), initial)
@settings(max_examples=200)
def test_perturbed_initial_values_keep_the_word(pair, f0):
    P, Q = pair
    out = ultimate_sign(HolonomicInstance(P, Q, f0), BUDGET)
    if not isinstance(out, Halted) or 0 in out.word:
        # words with zero letters only come out of the degenerate-gap path and lie on a line
        return
    eps = Fraction(1, 10**6)
    moved = ultimate_sign(HolonomicInstance(P, Q, (f0[0] + eps, f0[1] + eps)), Budget(200_000))
    assert isinstance(moved, Halted) and moved.word == out.word


def test_examples():
    P, Q = CLOSED_FORM_PAIR
    out = ultimate_sign(HolonomicInstance(P, Q, (1, 0)))
    assert out.word == (1, 1, -1, -1, -1, 1)
    assert ultimate_sign(HolonomicInstance(RatFunc(1), -x, (1, 1))) == NoUltimateSign()
    assert ultimate_sign(HolonomicInstance(P, Q, (0, 0))) == ZeroSequence(0)


def test_hyperbolic_constant():
    out = ultimate_sign(HolonomicInstance(RatFunc(1), RatFunc(Fraction(-1, 5)), (1, 1)))
    assert isinstance(out, Halted) and out.word == (1,)


def test_minimal_solution_exhausts_budget():
    # the smaller characteristic root of l^2 = l - 1/5
    root = quad(HALF, Fraction(-1, 10), 5)
    inst = HolonomicInstance(RatFunc(1), RatFunc(Fraction(-1, 5)), (1, root))
    assert isinstance(ultimate_sign(inst, Budget(3000)), BudgetExhausted)


def test_unstable_example_exhausts_every_budget():
    inst = unstable_example(x + 1, 1)
    for steps in (10, 1000, 5000):
        out = ultimate_sign(inst, Budget(steps))
        assert isinstance(out, BudgetExhausted) and out.steps_used == steps


def test_hint_minimal():
    inst = unstable_example(x + 1, 1)
    out = ultimate_sign_with_hint(inst, Hint.MINIMAL)
    assert isinstance(out, Halted)
    signs = sign_sequence(inst, out.N, out.N + 200)
    assert all(s == out.word[(out.N + i) % len(out.word)] for i, s in enumerate(signs))


def test_hint_not_minimal_delegates():
    inst = HolonomicInstance(*legendre_pair(HALF), (1, HALF))
    assert ultimate_sign_with_hint(inst, Hint.NOT_MINIMAL) == ultimate_sign(inst)


def test_determinism():
    inst = HolonomicInstance(*BINOMIAL_CUBE_PAIR, (0, -1))
    assert ultimate_sign(inst) == ultimate_sign(inst)
    short = HolonomicInstance(*CLOSED_FORM_PAIR, (1, -1))
    assert ultimate_sign(short, Budget(500)) == ultimate_sign(short, Budget(500))


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(0)


def test_start_index_needs_hyperbolic_pair():
    with pytest.raises(ContractViolation):
        hyperbolic_start_index(*CLOSED_FORM_PAIR)


def test_start_index_constant_case():
    N = hyperbolic_start_index(RatFunc(1), RatFunc(Fraction(-1, 5)))
    assert N >= 16
    assert certificate_spot_check(RatFunc(1), RatFunc(Fraction(-1, 5)), N) == []


def test_boundary_certificate():
    # exactly on the threshold, the slow logarithmic slack decides
    P, Q = RatFunc(1), Fraction(-1, 4) - 1 / (16 * x**2)
    N = hyperbolic_start_index(P, Q)
    assert certificate_spot_check(P, Q, N) == []


@pytest.mark.parametrize("pair", [CLOSED_FORM_PAIR, legendre_pair(HALF), BINOMIAL_CUBE_PAIR])
def test_residue_instances_are_hyperbolic_and_certified(pair):
    plan = make_plan(*pair)
    assert plan.kind == "runs" and len(plan.residues) == plan.tau
    for res in plan.residues:
        assert classify(res.P, res.Q).tag is Tag.HYPERBOLIC
        assert certificate_spot_check(res.P, res.Q, res.start, samples=20) == []


def test_least_index_reported():
    out = ultimate_sign(HolonomicInstance(*legendre_pair(HALF), (1, HALF)))
    assert out.N == 0 and out.word == (1, 1, -1, -1, -1, 1)
    plain = ultimate_sign(HolonomicInstance(*legendre_pair(HALF), (1, HALF)), least_index=False)
    assert plain.word == out.word and plain.N >= out.N
    assert values(HolonomicInstance(*legendre_pair(HALF), (1, HALF)), 2)[2] == Fraction(-1, 8)
