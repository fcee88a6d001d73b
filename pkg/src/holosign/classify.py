"""Type taxonomy of coefficient pairs and the sign words each type allows.

The type of ``(P, Q)`` depends only on ``R(x) = Q(x)/(P(x)P(x-1))``: its
ultimate sign, its degree, and for bounded negative ``R`` the first three
coefficients of its expansion in ``1/x``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DegenerateCoefficient
from .ratfunc import (
    RatFunc,
    asymptotic_sign,
    degree_theta,
    eventual_monotonicity,
    series_at_infinity,
)
from .recurrence import HolonomicInstance
from .scalar import quad, radicand, sign

BOTTOM = "⊥"


class Tag(str, Enum):
    INFTY_O_LOXODROMIC = "infty-O-loxodromic"
    INFTY_OMEGA_LOXODROMIC = "infty-Omega-loxodromic"
    HYPERBOLIC = "hyperbolic"
    THETA_O_ELLIPTIC = "theta-O-elliptic"
    Q_OMEGA_ELLIPTIC = "Q-Omega-elliptic"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class RecurrenceType:
    tag: Tag
    r: int = 0
    k: int = 0
    alphas: tuple = None
    monotonicity: tuple = None
    degree: object = None
    sign: int = 0
    which: str = None

    @property
    def is_loxodromic(self):
        return self.tag in (Tag.INFTY_O_LOXODROMIC, Tag.INFTY_OMEGA_LOXODROMIC)

    @property
    def gap(self):
        """Subsequence gap after which every residue instance is hyperbolic."""
        if self.is_loxodromic:
            return 2
        if self.tag is Tag.THETA_O_ELLIPTIC:
            return 2 * self.r
        return 1

    @property
    def critical_line_count(self):
        if self.tag is Tag.HYPERBOLIC or self.tag is Tag.INFTY_OMEGA_LOXODROMIC:
            return 1
        if self.tag is Tag.INFTY_O_LOXODROMIC:
            return 2
        if self.tag is Tag.THETA_O_ELLIPTIC:
            return self.r
        return 0

    def label(self):
        if self.tag is Tag.THETA_O_ELLIPTIC:
            return f"{self.tag.value}({self.r},{self.k})"
        if self.tag is Tag.DEGENERATE:
            return f"{self.tag.value}({self.which})"
        return self.tag.value


HYPERBOLIC_THRESHOLD = (Fraction(-1, 4), Fraction(0), Fraction(-1, 16))


def r_function(P, Q):
    """``Q(x) / (P(x) P(x-1))``."""
    return Q / (P * P.shift(-1))


def classify(P, Q):
    if P.is_zero() or Q.is_zero():
        raise DegenerateCoefficient("classification needs non-zero P and Q")
    R = r_function(P, Q)
    s = asymptotic_sign(R)
    d = degree_theta(R)
    mono = eventual_monotonicity(R)
    common = dict(monotonicity=mono, degree=d, sign=s)
    if s > 0:
        tag = Tag.INFTY_O_LOXODROMIC if d > 2 else Tag.INFTY_OMEGA_LOXODROMIC
        return RecurrenceType(tag, **common)
    if d > 2:
        return RecurrenceType(Tag.THETA_O_ELLIPTIC, 2, 1, **common)
    if d >= 1:
        return RecurrenceType(Tag.Q_OMEGA_ELLIPTIC, **common)
    alphas = tuple(series_at_infinity(R, 3))
    if alphas >= HYPERBOLIC_THRESHOLD:
        return RecurrenceType(Tag.HYPERBOLIC, alphas=alphas, **common)
    if alphas[1] == 0:
        rk = theta_lookup(alphas[0])
        if rk is not None:
            return RecurrenceType(Tag.THETA_O_ELLIPTIC, rk[0], rk[1], alphas=alphas, **common)
    return RecurrenceType(Tag.Q_OMEGA_ELLIPTIC, alphas=alphas, **common)


def degenerate_type(P, Q):
    which = "P" if P.is_zero() else "Q"
    if P.is_zero() and Q.is_zero():
        which = "PQ"
    return RecurrenceType(Tag.DEGENERATE, which=which)


def _theta_table():
    # alpha_0 = -1/(4 cos^2(k pi / r)) for every rational angle whose squared
    # cosine has degree at most 2 (Euler phi of r in {1, 2, 4})
    h = Fraction(1, 2)
    return {
        Fraction(-1): (3, 1),
        Fraction(-1, 2): (4, 1),
        Fraction(-1, 3): (6, 1),
        quad(-1, h, 2): (8, 1),
        quad(-1, -h, 2): (8, 3),
        quad(-2, 1, 3): (12, 1),
        quad(-2, -1, 3): (12, 5),
        quad(Fraction(-3, 2), h, 5): (5, 1),
        quad(Fraction(-3, 2), -h, 5): (5, 2),
        quad(Fraction(-1, 2), Fraction(1, 10), 5): (10, 1),
        quad(Fraction(-1, 2), Fraction(-1, 10), 5): (10, 3),
    }


THETA_TABLE = _theta_table()


def theta_lookup(alpha0):
    """``(r, k)`` with ``alpha0 = -1/(4 cos^2(k pi/r))`` and ``0 < k/r < 1/2``, or ``None``."""
    for value, rk in THETA_TABLE.items():
        if radicand(value) in (0, radicand(alpha0)) and value == alpha0:
            return rk
    return None


def _sine_sign(a, r):
    """Sign of ``sin(a pi / (2r))`` by residue arithmetic."""
    m = a % (4 * r)
    if m % (2 * r) == 0:
        return 0
    return 1 if m < 2 * r else -1


def theta_words(r, k, shifted):
    """The words ``s_j`` (``shifted=True``) or ``t_j`` for ``j = 0 .. 2r-1``."""
    length = (k % 2) * r + r
    out = []
    for j in range(2 * r):
        word = tuple(
            _sine_sign(2 * (j - i * k) + (1 if shifted else 0), r) for i in range(length)
        )
        out.append(word)
    return out


def possible_signs(rtype, r_constant=False):
    """Every ultimate sign word a non-zero solution can have, or ``{BOTTOM}``."""
    tag = rtype.tag
    if tag is Tag.DEGENERATE:
        raise ValueError("degenerate pairs have no sign classification")
    if rtype.is_loxodromic:
        return {(1,), (-1,), (1, -1), (-1, 1)}
    if tag is Tag.HYPERBOLIC:
        return {(1,), (-1,)}
    if tag is Tag.THETA_O_ELLIPTIC:
        words = set(theta_words(rtype.r, rtype.k, True))
        if r_constant:
            words |= set(theta_words(rtype.r, rtype.k, False))
        return words
    return {BOTTOM}


# -- stability precheck ------------------------------------------------------

def _binomial_coeffs(p):
    """Coefficients of ``p`` in the basis ``C(x, j)``: iterated forward differences at 0."""
    vals = [p(n) for n in range(max(p.degree, 0) + 1)]
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return out


def _integer_valued(p):
    return all(Fraction(c).denominator == 1 for c in _binomial_coeffs(p))


def stability_precheck(P, Q):
    """``'AllStable'`` when the sufficient condition for stable signs holds, else ``'Unknown'``."""
    unknown = "Unknown"
    if not (P.is_polynomial() and Q.is_polynomial()):
        return unknown
    if P.radicand() or Q.radicand() or Q.is_zero():
        return unknown
    p, q = P.num, Q.num
    d = p.degree
    if d < 1 or q.degree > d or p.lc <= 0:
        return unknown
    if not (_integer_valued(p) and _integer_valued(q)):
        return unknown
    if p.natural_roots() or q.natural_roots():
        return unknown
    qc = list(q.c) + [0] * (d + 1 - len(q.c))
    p0, p1 = p.c[d], p.c[d - 1]
    q0, q1 = qc[d], qc[d - 1]
    if abs(q0) < p0:
        return "AllStable"
    if abs(q0) != p0:
        return unknown
    s = sign(q0)
    if Q - s * P == RatFunc(1):
        return unknown
    lhs = s * q1 - p1 - (s if d == 1 else 0)
    return "AllStable" if lhs < p0 else unknown


def unstable_example(P, lam):
    """The instance ``(P, lam P + lam^2)`` with ``f = (-lam)^n``, whose sign is unstable."""
    if lam == 0:
        raise ValueError("lambda must be non-zero")
    if degree_theta(P) < 1 or asymptotic_sign(P) <= 0:
        raise ValueError("P must have positive degree and be ultimately positive")
    if P.num.natural_roots() or (P.den.degree > 0 and P.den.natural_roots()):
        raise ValueError("P must have no natural zeros or poles")
    return HolonomicInstance(P, lam * P + lam * lam, (Fraction(1), -lam))
