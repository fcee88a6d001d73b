"""Certified rational enclosures of ``ln n`` and of the halting threshold ``q(n)``.

``ln n`` is split as ``k*ln 2 + ln m`` with ``n = 2**k * m`` and ``m`` in
``[1, 2)``.  Each logarithm comes from the series
``2*atanh(z) = 2*(z + z**3/3 + ...)`` evaluated in integer fixed point with an
explicit error count, then snapped to the dyadic cell of width
``2**-(p + GUARD)`` that contains it.  Dyadic cells at finer levels sit inside
coarser ones, so enclosures nest as the precision grows.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PrecisionCapExceeded
from .scalar import is_rational, rational_bounds

GUARD = 32
DEFAULT_MAX_PRECISION = 1 << 16

# ln 2 = 0.693147..., so these bracket it
_LN2_LO = Fraction(6931, 10000)
_LN2_HI = Fraction(6932, 10000)


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def contains_interval(self, other):
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo + other.lo, self.hi + other.hi)
        return RatInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def scale(self, c):
        a, b = self.lo * c, self.hi * c
        return RatInterval(min(a, b), max(a, b))

    def reciprocal(self):
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)


def _atanh_fixed(num, den, bits):
    """``atanh(num/den) * 2**bits`` rounded down, plus an error bound in ulps."""
    power = (num << bits) // den
    z2n, z2d = num * num, den * den
    total = 0
    j = 0
    while power:
        total += power // (2 * j + 1)
        power = power * z2n // z2d
        j += 1
    # each term loses < 3 ulps to flooring; the dropped tail is < 4 ulps
    return total, 3 * j + 4


@lru_cache(maxsize=4096)
def _log_cell(num, den, level):
    """Dyadic cell ``[c, c+1] * 2**-level`` containing ``2*atanh(num/den)``.

    The target is ``ln((den+num)/(den-num))``, irrational whenever ``num != 0``,
    so a fine enough computation always lands inside a single cell.
    """
    bits = level + 16
    while True:
        approx, err = _atanh_fixed(num, den, bits)
        approx, err = 2 * approx, 2 * err
        shift = bits - level
        lo, hi = (approx - err) >> shift, (approx + err) >> shift
        if lo == hi:
            return lo
        bits += max(32, bits // 2)


def _log_parts(n):
    k = n.bit_length() - 1
    base = 1 << k
    return k, n - base, n + base


def log_bounds(n, precision):
    """Interval of width at most ``2**-precision`` containing ``ln n``."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"log_bounds needs an integer n >= 2, got {n!r}")
    if precision < 1:
        raise DomainError("precision must be positive")
    level = precision + GUARD
    k, zn, zd = _log_parts(n)
    scale = Fraction(1, 1 << level)
    c2 = _log_cell(1, 3, level)
    lo = k * c2 * scale
    hi = k * (c2 + 1) * scale
    if zn:
        cm = _log_cell(zn, zd, level)
        lo += cm * scale
        hi += (cm + 1) * scale
    return RatInterval(lo, hi)


def q_bounds(n, precision):
    """Enclosure of ``q(n) = 1/2 + 1/(4n) + 1/(4n ln n)``, with ``q(0) = q(1) = 1``."""
    if n in (0, 1):
        return RatInterval(Fraction(1), Fraction(1))
    ln = log_bounds(n, precision)
    base = Fraction(1, 2) + Fraction(1, 4 * n)
    return RatInterval(base + 1 / (4 * n * ln.hi), base + 1 / (4 * n * ln.lo))


def _crude_log(n):
    b = n.bit_length()
    return (b - 1) * _LN2_LO, b * _LN2_HI


def compare_rational_to_inv_log(c, n, max_precision=DEFAULT_MAX_PRECISION):
    """``'<'`` or ``'>'``: the relation between the rational ``c`` and ``1/ln n``."""
    c = Fraction(c)
    return compare_ratio_to_inv_log(c.numerator, c.denominator, n, max_precision)


def compare_ratio_to_inv_log(num, den, n, max_precision=DEFAULT_MAX_PRECISION):
    """Same as :func:`compare_rational_to_inv_log` for ``num/den`` given unreduced."""
    if n < 2:
        raise DomainError("comparison with 1/ln n needs n >= 2")
    if den < 0:
        num, den = -num, -den
    if num <= 0:
        return "<"
    # num/den > 1/ln n  <=>  num*ln n > den
    lo, hi = _crude_log(n)
    if num * lo.numerator > den * lo.denominator:
        return ">"
    if num * hi.numerator < den * hi.denominator:
        return "<"
    precision = 16
    while precision <= max_precision:
        ln = log_bounds(n, precision)
        if num * ln.lo.numerator > den * ln.lo.denominator:
            return ">"
        if num * ln.hi.numerator < den * ln.hi.denominator:
            return "<"
        precision *= 2
    raise PrecisionCapExceeded(
        f"could not separate {num}/{den} from 1/ln {n} within {max_precision} bits"
    )


def compare_scalar_to_inv_log(c, n, max_precision=DEFAULT_MAX_PRECISION):
    """Like :func:`compare_rational_to_inv_log` for a value of a quadratic field.

    ``c`` is algebraic and ``1/ln n`` is transcendental, so they never coincide.
    """
    if is_rational(c):
        return compare_rational_to_inv_log(c, n, max_precision)
    bits = 64
    while bits <= max_precision:
        lo, hi = rational_bounds(c, bits)
        if lo > 0 and compare_rational_to_inv_log(lo, n, max_precision) == ">":
            return ">"
        if compare_rational_to_inv_log(hi, n, max_precision) == "<":
            return "<"
        bits *= 2
    raise PrecisionCapExceeded(f"could not separate {c} from 1/ln {n}")


def exp_bounds(x, terms=60):
    """Crude enclosure of ``exp(x)`` for rational ``x`` with ``|x| <= 64``.

    Used only as an independent check on :func:`log_bounds`.
    """
    x = Fraction(x)
    halvings = 0
    while abs(x) > Fraction(1, 2):
        x /= 2
        halvings += 1
    s, t = Fraction(0), Fraction(1)
    for j in range(terms):
        s += t
        t = t * x / (j + 1)
    # |tail| <= 2|t| once |x| <= 1/2
    lo, hi = s - 2 * abs(t), s + 2 * abs(t)
    for _ in range(halvings):
        lo, hi = lo * lo, hi * hi
    return RatInterval(lo, hi)
