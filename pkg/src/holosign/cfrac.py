"""Continued-fraction probes and bracketing of critical slopes.

A critical line through the origin of the ``(f(0), f(1))`` plane separates
initial values with different ultimate signs, and initial values on it never
halt.  Slopes are bracketed by bisecting on the word returned by the partial
algorithm, seeded by the accumulation points of the continued fraction.
"""

from dataclasses import dataclass
from fractions import Fraction

from .recurrence import INFINITY, HolonomicInstance
from .scalar import is_rational, rational_bounds
from .ratfunc import eval_at_integer
from .ultsign import Budget, make_plan, ultimate_sign


def cfrac_probe(P, Q, tau, horizon):
    """Values ``-A(n)/B(n)`` for ``2 <= n <= horizon``, grouped by ``n mod tau``.

    ``A`` and ``B`` solve the recurrence with initial values ``(1, 0)`` and
    ``(0, 1)``; ``-A(n)/B(n)`` is the slope ``f(1)/f(0)`` of the initial values
    whose ``n``-th term vanishes.
    """
    groups = [[] for _ in range(tau)]
    if horizon < 2:
        return groups
    a0, a1, b0, b1 = 1, 0, 0, 1
    for n in range(2, horizon + 1):
        p, q = eval_at_integer(P, n - 2), eval_at_integer(Q, n - 2)
        a0, a1 = a1, p * a1 + q * a0
        b0, b1 = b1, p * b1 + q * b0
        groups[n % tau].append(INFINITY if b1 == 0 else -a1 / b1)
    return groups


@dataclass(frozen=True)
class SlopeBracket:
    """A certified bracket of one critical slope.

    With ``inverted`` set, ``lo`` and ``hi`` bound ``f(0)/f(1)`` instead of
    ``f(1)/f(0)``; that form is used for steep lines and covers vertical ones.
    """

    line_index: int
    lo: Fraction
    hi: Fraction
    residue_class: int
    inverted: bool = False
    words: tuple = ()
    met_target: bool = True

    def slope_interval(self):
        """Bounds on ``f(1)/f(0)``, or ``None`` when the bracket contains the vertical line."""
        if not self.inverted:
            return self.lo, self.hi
        if self.lo <= 0 <= self.hi:
            return None
        return 1 / self.hi, 1 / self.lo

    def contains_slope(self, s):
        if s is INFINITY:
            return self.inverted and self.lo < 0 < self.hi
        if not self.inverted:
            return self.lo < s < self.hi
        return s != 0 and self.lo < 1 / s < self.hi

    def slope_words(self):
        """Words at ``(1, lo)`` and ``(1, hi)`` in slope order, or ``None`` across the vertical."""
        if not self.inverted:
            return self.words
        if self.slope_interval() is None:
            return None
        # (t, 1) = t * (1, 1/t): swap ends, and negate when t < 0
        wl, wh = self.words
        if self.lo < 0:
            wl, wh = tuple(-s for s in wl), tuple(-s for s in wh)
        return wh, wl

    @property
    def width(self):
        iv = self.slope_interval()
        return None if iv is None else iv[1] - iv[0]

    def homogeneous(self):
        """Endpoints as direction ratios ``f(0):f(1)``."""
        if self.inverted:
            return [f"{self.lo}:1", f"{self.hi}:1"]
        return [f"1:{self.lo}", f"1:{self.hi}"]


def _as_fraction(v, bits=80):
    if is_rational(v):
        return Fraction(v)
    lo, _ = rational_bounds(v, bits)
    return lo


def _seeds(P, Q, tau, horizon):
    out = []
    for i, group in enumerate(cfrac_probe(P, Q, tau, horizon)):
        if group:
            v = group[-1]
            out.append((i, INFINITY if v is INFINITY else _as_fraction(v).limit_denominator(10**12)))
    return out


def _coordinate(seed):
    """``(inverted, value)`` placing the seed in whichever chart keeps it small."""
    if seed is INFINITY:
        return True, Fraction(0)
    if abs(seed) > 1:
        return True, 1 / seed
    return False, seed


class _Prober:
    def __init__(self, P, Q, sub_budget):
        self.P, self.Q = P, Q
        self.budget = sub_budget
        self.calls = 0
        self.steps = 0

    def word(self, inverted, t):
        f0 = (t, Fraction(1)) if inverted else (Fraction(1), t)
        out = ultimate_sign(HolonomicInstance(self.P, self.Q, f0), self.budget, least_index=False)
        self.calls += 1
        self.steps += out.steps_used
        return out.word if out.kind == "Halted" else None


_FRACTIONS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4))


def _width(inverted, lo, hi):
    if not inverted:
        return hi - lo
    if lo <= 0 <= hi:
        return hi - lo
    return abs(1 / lo - 1 / hi)


def _expand(prober, inverted, seed, limit):
    """Grow a symmetric interval around ``seed`` until its endpoint words differ."""
    h = min(Fraction(1, 1000), limit / 2)
    while True:
        lo, hi = seed - h, seed + h
        wl, wh = prober.word(inverted, lo), prober.word(inverted, hi)
        if wl is not None and wh is not None and wl != wh:
            return lo, hi, wl, wh
        if h >= limit:
            return None
        h = min(2 * h, limit)


def _shrink(prober, inverted, lo, hi, wl, wh, target):
    """Bisect while keeping differing words at the two ends.

    Returns the final ``(lo, hi, wl, wh, met)``.
    """
    exhausted = set()
    while _width(inverted, lo, hi) > target:
        for frac in _FRACTIONS:
            c = lo + frac * (hi - lo)
            if c in exhausted:
                continue
            w = prober.word(inverted, c)
            if w is None:
                exhausted.add(c)
                continue
            if w == wl:
                lo = c
            else:
                hi, wh = c, w
            break
        else:
            return lo, hi, wl, wh, False
    return lo, hi, wl, wh, True


@dataclass(frozen=True)
class SlopeReport:
    brackets: tuple
    steps_used: int
    lines_expected: int

    @property
    def complete(self):
        """Every expected line was bracketed down to the target width."""
        return len(self.brackets) == self.lines_expected and all(
            b.met_target for b in self.brackets
        )


def _line_count(P, Q):
    rtype = make_plan(P, Q, 0).rtype
    if rtype is None or rtype.critical_line_count == 0:
        raise ValueError("critical slopes need a loxodromic, hyperbolic or rational elliptic pair")
    return rtype, rtype.critical_line_count


def _sub_budget(budget, lines):
    return Budget(max(1, budget.max_steps // (8 * lines)), budget.max_precision)


def critical_slopes(P, Q, target_width, budget=Budget(), horizon=400):
    """Brackets of width at most ``target_width`` around every critical slope.

    Each probe runs with ``budget.max_steps / (8 * lines)`` steps.  A probe that
    exhausts its share may sit exactly on a line, so the interval is then
    split at its thirds (and quarters) instead of the midpoint.  Widths are
    measured in slope units, also for brackets kept in the inverted chart.
    """
    target_width = Fraction(target_width)
    rtype, lines = _line_count(P, Q)
    tau = rtype.r if rtype.r else max(lines, 2)
    prober = _Prober(P, Q, _sub_budget(budget, lines))
    seeds = []
    for i, s in _seeds(P, Q, tau, horizon):
        inv, t = _coordinate(s)
        if all(not (inv == j and abs(t - u) < Fraction(1, 10**6)) for _, j, u in seeds):
            seeds.append((i, inv, t))
    brackets = []
    for i, inv, t in seeds[:lines]:
        # stay clear of other seeds in the same chart
        gaps = [abs(t - u) for _, j, u in seeds if j == inv and u != t]
        limit = min([Fraction(1, 2)] + [g / 2 for g in gaps])
        found = _expand(prober, inv, t, limit)
        if found is None:
            continue
        lo, hi, wl, wh, met = _shrink(prober, inv, *found, target_width)
        brackets.append(SlopeBracket(0, lo, hi, i, inv, (wl, wh), met))
    brackets.sort(key=_slope_key)
    brackets = tuple(
        SlopeBracket(n, b.lo, b.hi, b.residue_class, b.inverted, b.words, b.met_target)
        for n, b in enumerate(brackets)
    )
    return SlopeReport(brackets, prober.steps, lines)


def refine_bracket(P, Q, bracket, target_width, budget=Budget()):
    """Continue bisecting an existing bracket down to a smaller width.

    The probes follow the same path ``critical_slopes`` would have taken, so
    the result is nested in ``bracket``.  Returns ``(bracket, steps_used)``.
    """
    _, lines = _line_count(P, Q)
    prober = _Prober(P, Q, _sub_budget(budget, lines))
    wl, wh = bracket.words
    lo, hi, wl, wh, met = _shrink(
        prober, bracket.inverted, bracket.lo, bracket.hi, wl, wh, Fraction(target_width)
    )
    out = SlopeBracket(
        bracket.line_index, lo, hi, bracket.residue_class, bracket.inverted, (wl, wh), met
    )
    return out, prober.steps


def _slope_key(b):
    iv = b.slope_interval()
    if iv is None:
        return (1, Fraction(0))
    return (0, (iv[0] + iv[1]) / 2)
