"""Second-order recurrences ``f(n+2) = P(n) f(n+1) + Q(n) f(n)``.

Covers exact iteration, the shift/parity normalization, sign words, the
generalized canonical numerators ``A^(i)`` and denominators ``B^(i)`` with
``f(n+i) = B^(i)(n) f(n+1) + A^(i)(n) f(n)``, the gap recurrences they induce,
and continued-fraction values.
"""

from dataclasses import dataclass
from threading import Lock

from .errors import DegenerateCoefficient, DegenerateDenominator, Indeterminate
from .ratfunc import RatFunc, eval_at_integer, eventual_integer_sign, max_nat_root_or_pole
from .scalar import sdiv, sign
from .stepper import make_stepper

LETTERS = {1: "+", -1: "-", 0: "0"}


class _Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__


INFINITY = _Infinity()


@dataclass(frozen=True)
class HolonomicInstance:
    """A sequence fixed by its coefficients and the values ``f(base), f(base+1)``."""

    P: RatFunc
    Q: RatFunc
    f0: tuple
    base: int = 0

    def __post_init__(self):
        object.__setattr__(self, "f0", tuple(self.f0))


@dataclass(frozen=True)
class NormalizedInstance:
    """``inner.f(n) = (-1)**n * f(n + shift)`` if ``parity_flipped``, else ``f(n + shift)``."""

    inner: HolonomicInstance
    shift: int
    parity_flipped: bool


# -- iteration ---------------------------------------------------------------

def iterate(inst, up_to):
    """Yield the exact values ``f(base), ..., f(up_to)``."""
    a, b = inst.f0
    n = inst.base
    if up_to >= n:
        yield a
    if up_to >= n + 1:
        yield b
    while n + 2 <= up_to:
        c = eval_at_integer(inst.P, n) * b + eval_at_integer(inst.Q, n) * a
        a, b = b, c
        n += 1
        yield c


def values(inst, up_to):
    return list(iterate(inst, up_to))


def value_pair(inst, n):
    """``(f(n), f(n+1))`` for ``n >= base``."""
    if n == inst.base:
        return inst.f0
    vals = values(inst, n + 1)
    return vals[-2], vals[-1]


def sign_sequence(inst, start, stop):
    """Signs of ``f(start), ..., f(stop - 1)`` via projective integer stepping."""
    if start < inst.base:
        raise ValueError("start precedes the base index")
    st = make_stepper(inst.P, inst.Q, inst.base, *inst.f0)
    out = []
    while st.n < stop:
        if st.n >= start:
            out.append(st.sign())
        if st.n + 1 < stop:
            st.step()
        else:
            break
    return out


# -- words -------------------------------------------------------------------

def word_string(word):
    return "".join(LETTERS[s] for s in word)


def parse_word(text):
    inv = {v: k for k, v in LETTERS.items()}
    return tuple(inv[ch] for ch in text)


def shortest_period(word):
    """The word cut down to its fundamental period."""
    word = tuple(word)
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word == word[:p] * (n // p):
            return word[:p]
    return word


def rotate_to_phase(word, N):
    """Reindex a word whose first letter applies at index ``N`` to the ``n mod len`` convention."""
    L = len(word)
    out = [0] * L
    for i, s in enumerate(word):
        out[(N + i) % L] = s
    return tuple(out)


# -- normalization -----------------------------------------------------------

def normalize(inst):
    """Shift past every natural zero or pole and make ``P`` ultimately positive."""
    P, Q = inst.P, inst.Q
    if P.is_zero() or Q.is_zero():
        raise DegenerateCoefficient("P and Q must both be non-zero")
    m = max_nat_root_or_pole(P, Q)
    s = inst.base if m is None else max(inst.base, m + 1)
    f0 = value_pair(inst, s)
    P1, Q1 = P.shift(s), Q.shift(s)
    flipped = sign(P1.num.lc) < 0
    if flipped:
        P1 = -P1
        f0 = (f0[0], -f0[1])
    return NormalizedInstance(HolonomicInstance(P1, Q1, f0, 0), s, flipped)


def denormalize_word(word, N, norm):
    """Map a word valid from ``N`` on the normalized sequence back to original indices.

    Both words follow the ``n mod len`` phase convention of their own indexing.
    """
    word = tuple(word)
    if norm.parity_flipped:
        if len(word) % 2:
            word = word * 2
        word = tuple(s if i % 2 == 0 else -s for i, s in enumerate(word))
    L = len(word)
    out = [0] * L
    for i, s in enumerate(word):
        out[(i + norm.shift) % L] = s
    return shortest_period(out), N + norm.shift


# -- canonical numerators and denominators --------------------------------

_AB_CACHE = {}
_AB_LOCK = Lock()


def _denominators(P, Q, count):
    """``[B^(0), ..., B^(count)]``, memoized per coefficient pair."""
    key = (P, Q)
    with _AB_LOCK:
        table = _AB_CACHE.get(key)
        if table is None:
            table = [RatFunc(0), RatFunc(1)]
            _AB_CACHE[key] = table
        have = list(table)
    shifted_Q = Q.shift(1)
    while len(have) <= count:
        i = len(have) - 2
        nxt = P * have[i + 1].shift(1) + shifted_Q * have[i].shift(2)
        have.append(nxt)
    with _AB_LOCK:
        if len(_AB_CACHE[key]) < len(have):
            _AB_CACHE[key] = have
    return have[: count + 1]


def canonical_AB(P, Q, tau):
    """``(A^(tau), B^(tau))`` with ``f(n+tau) = B^(tau)(n) f(n+1) + A^(tau)(n) f(n)``."""
    if tau < 1:
        raise ValueError("tau must be positive")
    B = _denominators(P, Q, tau)
    A = Q * B[tau - 1].shift(1)
    return A, B[tau]


def gap_coeffs(P, Q, tau):
    """Coefficients ``(P_tau, Q_tau)`` of ``f(n+2tau) = P_tau(n) f(n+tau) + Q_tau(n) f(n)``."""
    A1, B1 = canonical_AB(P, Q, tau)
    if B1.is_zero():
        raise DegenerateDenominator(f"B^({tau}) vanishes identically")
    A2, B2 = canonical_AB(P, Q, 2 * tau)
    Pt = B2 / B1
    return Pt, A2 - Pt * A1


def degenerate_gap_sign(inst, tau, A, start):
    """Ultimate sign when ``f(n + tau) = A(n) f(n)`` for every ``n >= start``.

    Returns ``(word, N)`` under the ``n mod len`` phase convention.
    """
    if A.is_zero():
        return (0,), start + tau
    _, NA = eventual_integer_sign(A)
    N = max(start, NA, inst.base)
    vals = values(inst, N + 2 * tau - 1)[N - inst.base:]
    word = rotate_to_phase([sign(v) for v in vals], N)
    return shortest_period(word), N


# -- continued fractions ---------------------------------------------------

def cfrac_value(P, Q, n):
    """``Q(0)/(P(0) + Q(1)/(P(1) + ... Q(n)/P(n)))`` as ``A(n+2)/B(n+2)``."""
    a0, a1 = 1, 0
    b0, b1 = 0, 1
    for k in range(n + 1):
        p, q = eval_at_integer(P, k), eval_at_integer(Q, k)
        a0, a1 = a1, p * a1 + q * a0
        b0, b1 = b1, p * b1 + q * b0
    if b1 == 0:
        if a1 == 0:
            raise Indeterminate("both convergent terms vanish")
        return INFINITY
    return sdiv(a1, b1)
