"""The partial algorithm for ultimate signs.

A hyperbolic pair is handled directly: iterate until the ratio
``f(n+1)/f(n)`` exceeds ``q(n) P(n-1)``, after which the sign of ``f`` is
locked.  Loxodromic and rational-angle elliptic pairs are first cut into
``tau`` interleaved subsequences, each of which is hyperbolic, and the
per-residue runs are advanced round-robin under one shared step budget.
"""

import copy
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import ClassVar

from .classify import HYPERBOLIC_THRESHOLD, Tag, classify, r_function
from .errors import ContractViolation
from .numerics import DEFAULT_MAX_PRECISION, log_bounds, q_bounds
from .ratfunc import (
    RatFunc,
    asymptotic_sign,
    degree_theta,
    eventual_compare,
    eventual_integer_sign,
    max_nat_root_or_pole,
    series_at_infinity,
)
from .recurrence import (
    HolonomicInstance,
    NormalizedInstance,
    canonical_AB,
    degenerate_gap_sign,
    denormalize_word,
    normalize,
    shortest_period,
    sign_sequence,
    values,
)
from .scalar import abs_upper, sign
from .stepper import coefficient_evaluator, make_stepper

DEFAULT_MAX_STEPS = 100_000
PERSISTENCE_WINDOW = 50


@dataclass(frozen=True)
class Budget:
    max_steps: int = DEFAULT_MAX_STEPS
    max_precision: int = DEFAULT_MAX_PRECISION

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_precision <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class Halted:
    N: int
    word: tuple
    steps_used: int = 0
    kind: ClassVar[str] = "Halted"
    definitive: ClassVar[bool] = True


@dataclass(frozen=True)
class ZeroSequence:
    N: int = 0
    word: tuple = (0,)
    steps_used: int = 0
    kind: ClassVar[str] = "ZeroSequence"
    definitive: ClassVar[bool] = True


@dataclass(frozen=True)
class NoUltimateSign:
    steps_used: int = 0
    kind: ClassVar[str] = "NoUltimateSign"
    definitive: ClassVar[bool] = True


@dataclass(frozen=True)
class BudgetExhausted:
    steps_used: int = 0
    kind: ClassVar[str] = "BudgetExhausted"
    definitive: ClassVar[bool] = False


class Hint(str, Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not-minimal"


# -- start index certificate -------------------------------------------------

_X = RatFunc.x()
# rational part of the lower bound for q(n)(1 - q(n+1)), valid for n >= 3
HALTING_LOWER_BOUND = Fraction(1, 4) + 1 / (16 * _X**2) - 1 / _X**3


def _sign_bounds(P, Q):
    _, NP = eventual_integer_sign(P)
    _, NQ = eventual_integer_sign(Q)
    # the halting test also reads P(n-1)
    return max(NP + 1, NQ)


def _hyperbolic_alphas(R):
    """The expansion of ``R`` at infinity if the pair is hyperbolic, else ``None``.

    Same decision as :func:`classify` without its monotonicity analysis.
    """
    if asymptotic_sign(R) > 0 or degree_theta(R) > 0:
        return None
    alphas = tuple(series_at_infinity(R, 3))
    return alphas if alphas >= HYPERBOLIC_THRESHOLD else None


def hyperbolic_start_index(P, Q):
    """An index from which ``-R(n) <= q(n)(1 - q(n+1))`` holds for every ``n``.

    ``P`` may be ultimately negative; the bound only depends on ``|P|``.
    """
    R = r_function(P, Q)
    alphas = _hyperbolic_alphas(R)
    if alphas is None:
        raise ContractViolation(f"expected a hyperbolic pair, got {classify(P, Q).label()}")
    bounds = [16, _sign_bounds(P, Q)]
    if alphas > HYPERBOLIC_THRESHOLD:
        rel, N = eventual_compare(-R, HALTING_LOWER_BOUND)
        if rel != "<":
            raise ContractViolation("strict hyperbolic case failed its certificate")
        bounds.append(N)
    else:
        # -R = G0 + O(1/n^3): bound the cubic remainder by C, then wait until
        # 16 (C + 2) ln(n)^2 <= n, where the 1/(16 n^2 ln^2 n) slack takes over
        rest = (-R - HALTING_LOWER_BOUND - 2 / _X**3) * _X**3
        lead = rest.num.lc / rest.den.lc if rest.num.degree == rest.den.degree else 0
        C = max(ceil(abs_upper(lead)) + 1, 1)
        rel, N2 = eventual_compare(rest, RatFunc(C))
        if rel != "<":
            raise ContractViolation("boundary hyperbolic case failed its certificate")
        n = 8
        while 16 * (C + 2) * log_bounds(n, 20).hi ** 2 > n:
            n *= 2
        bounds += [N2, n]
    return max(bounds)


def certificate_spot_check(P, Q, N, samples=100, span=10_000, precision=64):
    """Check ``q(n)(1 - q(n+1)) + R(n) >= 0`` at sample points of ``[N, N + span]``.

    Returns the list of failing ``n`` (empty when the certificate holds).
    """
    R = r_function(P, Q)
    step = max(1, span // max(1, samples - 1))
    failures = []
    for n in range(N, N + span + 1, step):
        lower = q_bounds(n, precision).lo * (1 - q_bounds(n + 1, precision).hi)
        if sign(lower + R(n)) < 0:
            failures.append(n)
    return failures


# -- one hyperbolic run -------------------------------------------------------

class HyperbolicRun:
    """Stepwise execution of the halting test on one hyperbolic instance.

    A pair with ultimately negative ``P`` is run as ``(-P, Q)`` on
    ``(-1)^n f(n)``; the reported local word then alternates.
    """

    def __init__(self, P, Q, f0, start, max_precision=DEFAULT_MAX_PRECISION):
        self.flip = asymptotic_sign(P) < 0
        if self.flip:
            P = -P
            f0 = (f0[0], -f0[1])
        self.stepper = make_stepper(P, Q, 0, *f0)
        d = getattr(self.stepper, "d", 0)
        self.P_eval = coefficient_evaluator(P, d)
        self.start = start
        self.max_precision = max_precision
        self.result = None
        if self.stepper.is_zero():
            self.result = (0, (0,))

    @property
    def halted(self):
        return self.result is not None

    def _passes(self, st):
        if st.n < 2 or st.sign() == 0:
            return False
        return st.exceeds_threshold(self.P_eval.at(st.n - 1), self.max_precision)

    def advance(self):
        """Test the halting condition at the current index, else take one step."""
        st = self.stepper
        if st.n >= self.start and self._passes(st):
            self._confirm()
            s = st.sign()
            self.result = (st.n, (s, -s) if self.flip else (s,))
            return True
        st.step()
        return False

    def _confirm(self):
        probe = copy.copy(self.stepper)
        for _ in range(PERSISTENCE_WINDOW):
            probe.step()
            if not self._passes(probe):
                raise AssertionError(
                    f"halting condition at {self.stepper.n} did not persist to {probe.n}"
                )


def hyperbolic_run(inst, N, budget=Budget()):
    """Run the halting test on a hyperbolic normalized instance from index ``N``."""
    inner = inst.inner if hasattr(inst, "inner") else inst
    run = HyperbolicRun(inner.P, inner.Q, inner.f0, N, budget.max_precision)
    steps = 0
    if run.halted:
        return ZeroSequence(inner.base, (0,), 0)
    while not run.advance():
        steps += 1
        if steps >= budget.max_steps:
            return BudgetExhausted(steps)
    n, word = run.result
    return Halted(n + inner.base, word, steps)


class InterleavedRun:
    """The halting test on every residue subsequence, driven by one stream of ``f``.

    Stepping the original recurrence keeps the coefficients small, and a
    single stream of terms serves all ``tau`` residues.  The stepper keeps
    ``f(n)`` only up to a positive scale that changes by a known factor per
    step, so ``f(n + tau)/f(n)`` is recovered from the last ``tau`` factors.
    """

    def __init__(self, plan, inner, max_precision=DEFAULT_MAX_PRECISION):
        self.tau = plan.tau
        self.residues = plan.residues
        self.max_precision = max_precision
        self.stepper = st = make_stepper(inner.P, inner.Q, 0, *inner.f0)
        d = getattr(st, "d", 0)
        self.evals = [coefficient_evaluator(res.P, d) for res in plan.residues]
        self.flips = [asymptotic_sign(res.P) < 0 for res in plan.residues]
        self.results = [None] * len(plan.residues)
        self.confirmed = [0] * len(plan.residues)
        self.first = min(res.offset for res in plan.residues)
        self.history = deque(maxlen=self.tau + 1)  # (u_n, scale factor of step n -> n+1)
        self._check_zero_residues(inner)

    def _check_zero_residues(self, inner):
        top = max(res.offset for res in self.residues) + self.tau
        vals = values(inner, top)
        for i, res in enumerate(self.residues):
            if vals[res.offset] == 0 and vals[res.offset + self.tau] == 0:
                self.results[i] = (0, (0,))
                self.confirmed[i] = PERSISTENCE_WINDOW

    @property
    def halted(self):
        return all(r is not None for r in self.results)

    @property
    def finished(self):
        return self.halted and all(c >= PERSISTENCE_WINDOW for c in self.confirmed)

    def _ratio(self):
        """``(U, V)`` proportional to ``(f(n - tau), f(n))`` with a common scale."""
        st = self.stepper
        num = den = 1
        for _, (a, b) in list(self.history)[:-1]:
            num, den = num * a, den * b
        old = self.history[0][0]
        return st.scaled(old, num), st.scaled(st.current(), den)

    def _test(self, n):
        tau = self.tau
        st = self.stepper
        for i, res in enumerate(self.residues):
            if (n - res.offset) % tau or n - tau < res.offset:
                continue
            j = (n - res.offset) // tau - 1  # local index of f(n - tau)
            if self.results[i] is not None and self.confirmed[i] >= PERSISTENCE_WINDOW:
                continue
            if j < max(res.start, 2):
                continue
            U, V = self._ratio()
            ok = st.sign_of(U) != 0 and st.ratio_exceeds(
                U, V, self.evals[i].at(j - 1), j, self.max_precision
            )
            if self.results[i] is None:
                if ok:
                    t = st.sign_of(U)
                    if self.flips[i]:
                        t = -t if j % 2 else t
                        self.results[i] = (j, (t, -t))
                    else:
                        self.results[i] = (j, (t,))
            elif ok:
                self.confirmed[i] += 1
            else:
                raise AssertionError(
                    f"halting condition of residue {res.offset} at {self.results[i][0]} "
                    f"did not persist to {j}"
                )

    def advance(self):
        """Take one step of ``f``; return whether every residue has halted."""
        st = self.stepper
        if st.n >= self.first:
            self.history.append((st.current(), None))
            if len(self.history) == self.tau + 1:
                self._test(st.n)
        st.step()
        if self.history:
            u, _ = self.history[-1]
            self.history[-1] = (u, st.scale)
        return self.halted


# -- planning -----------------------------------------------------------------

@dataclass(frozen=True)
class Residue:
    offset: int  # inner index of the residue's first term
    P: RatFunc
    Q: RatFunc
    start: int


@dataclass(frozen=True)
class Plan:
    """Everything about ``(P, Q, base)`` that does not depend on the initial values."""

    kind: str  # "decoupled", "no-sign", "gap-degenerate", "runs"
    rtype: object = None
    shift: int = 0
    flipped: bool = False
    inner_P: RatFunc = None
    inner_Q: RatFunc = None
    tau: int = 1
    A: RatFunc = None
    start: int = 0
    residues: tuple = field(default=())


@lru_cache(maxsize=256)
def make_plan(P, Q, base=0):
    if P.is_zero() or Q.is_zero():
        if P.is_zero() and Q.is_zero():
            return Plan("decoupled", tau=1, A=RatFunc(0), start=base)
        if P.is_zero():
            return Plan("decoupled", tau=2, A=Q, start=base)
        return Plan("decoupled", tau=1, A=P.shift(-1), start=base + 1)
    norm = normalize(HolonomicInstance(P, Q, (0, 0), base))
    iP, iQ = norm.inner.P, norm.inner.Q
    rtype = classify(iP, iQ)
    common = dict(rtype=rtype, shift=norm.shift, flipped=norm.parity_flipped, inner_P=iP, inner_Q=iQ)
    if rtype.tag is Tag.Q_OMEGA_ELLIPTIC:
        return Plan("no-sign", **common)
    if rtype.tag is Tag.HYPERBOLIC:
        res = Residue(0, iP, iQ, hyperbolic_start_index(iP, iQ))
        return Plan("runs", tau=1, residues=(res,), **common)
    tau = rtype.gap
    A1, B1 = canonical_AB(iP, iQ, tau)
    if B1.is_zero():
        return Plan("gap-degenerate", tau=tau, A=A1, start=0, **common)
    A2, B2 = canonical_AB(iP, iQ, 2 * tau)
    if B2.is_zero():
        return Plan("gap-degenerate", tau=2 * tau, A=A2, start=0, **common)
    Pt = B2 / B1
    Qt = A2 - Pt * A1
    worst = [max_nat_root_or_pole(Pt, Qt)]
    for p in (B1.num, B1.den):
        if p.degree > 0:
            worst.append(max(p.natural_roots(), default=None))
    worst = [w for w in worst if w is not None]
    N0 = 1 + max(worst) if worst else 0
    residues = []
    for off in range(N0, N0 + tau):
        rP, rQ = Pt.compose_affine(tau, off), Qt.compose_affine(tau, off)
        residues.append(Residue(off, rP, rQ, hyperbolic_start_index(rP, rQ)))
    return Plan("runs", tau=tau, residues=tuple(residues), **common)


def _inner_instance(plan, inst):
    s = plan.shift
    vals = values(inst, s + 1)
    f0 = (vals[-2], vals[-1])
    if plan.flipped:
        f0 = (f0[0], -f0[1])
    return HolonomicInstance(plan.inner_P, plan.inner_Q, f0, 0)


def _assemble(plan, local_results):
    """Combine per-residue ``(m, word)`` results into an inner ``(word, N)``."""
    tau = plan.tau
    period = 1
    for _, w in local_results:
        period = max(period, len(w))
    mapped = [
        (res.offset + tau * m, res, w) for res, (m, w) in zip(plan.residues, local_results)
    ]
    N = max(n for n, _, _ in mapped)
    L = tau * period
    word = [0] * L
    for res, (_, w) in zip(plan.residues, local_results):
        for n in range(N, N + L):
            if (n - res.offset) % tau == 0:
                m = (n - res.offset) // tau
                word[n % L] = w[m % len(w)]
    return shortest_period(word), N


def _finish(plan, inst, word, N, steps, least_index):
    if plan.kind != "decoupled":
        norm = NormalizedInstance(None, plan.shift, plan.flipped)
        word, N = denormalize_word(word, N, norm)
    if least_index:
        N = least_valid_index(inst, word, N)
    return Halted(N, tuple(word), steps)


def least_valid_index(inst, word, N):
    """Smallest ``N' <= N`` such that ``word`` already matches from ``N'``."""
    if N <= inst.base:
        return max(N, inst.base)
    signs = sign_sequence(inst, inst.base, N)
    L = len(word)
    idx = N - 1
    while idx >= inst.base and signs[idx - inst.base] == word[idx % L]:
        idx -= 1
    return idx + 1


def _residue_instances(plan, inner):
    tau = plan.tau
    top = max(res.offset for res in plan.residues) + tau
    vals = values(inner, top)
    return [(res, (vals[res.offset], vals[res.offset + tau])) for res in plan.residues]


def ultimate_sign(inst, budget=Budget(), least_index=True):
    """Run the partial algorithm; see the module docstring."""
    if all(v == 0 for v in inst.f0):
        return ZeroSequence(inst.base)
    plan = make_plan(inst.P, inst.Q, inst.base)
    if plan.kind == "decoupled":
        word, N = degenerate_gap_sign(inst, plan.tau, plan.A, plan.start)
        return _finish(plan, inst, word, N, 0, least_index)
    if plan.kind == "no-sign":
        return NoUltimateSign()
    inner = _inner_instance(plan, inst)
    if plan.kind == "gap-degenerate":
        word, N = degenerate_gap_sign(inner, plan.tau, plan.A, plan.start)
        return _finish(plan, inst, word, N, 0, least_index)
    run = InterleavedRun(plan, inner, budget.max_precision)
    steps = 0
    while not run.halted:
        if run.advance():
            break
        steps += 1
        if steps >= budget.max_steps:
            return BudgetExhausted(steps)
    while not run.finished:
        run.advance()
    word, N = _assemble(plan, run.results)
    return _finish(plan, inst, word, N, steps, least_index)


def ultimate_sign_with_hint(inst, hint, budget=Budget(), least_index=True):
    """Use a caller-supplied answer to the minimality question.

    With ``Hint.MINIMAL`` the sign of each residue is read at its first
    non-zero term past the certified start index; the result is only
    meaningful if the hint is true.
    """
    hint = Hint(hint)
    if hint is Hint.NOT_MINIMAL:
        return ultimate_sign(inst, budget, least_index)
    if all(v == 0 for v in inst.f0):
        return ZeroSequence(inst.base)
    plan = make_plan(inst.P, inst.Q, inst.base)
    if plan.kind != "runs":
        return ultimate_sign(inst, budget, least_index)
    inner = _inner_instance(plan, inst)
    results = []
    for res, f0 in _residue_instances(plan, inner):
        flip = asymptotic_sign(res.P) < 0
        P = -res.P if flip else res.P
        g0 = (f0[0], -f0[1]) if flip else f0
        if all(v == 0 for v in g0):
            results.append((0, (0,)))
            continue
        st = make_stepper(P, res.Q, 0, *g0)
        while st.n < res.start or st.sign() == 0:
            st.step()
        s = st.sign()
        results.append((st.n, (s, -s) if flip else (s,)))
    word, N = _assemble(plan, results)
    return _finish(plan, inst, word, N, 0, least_index)
