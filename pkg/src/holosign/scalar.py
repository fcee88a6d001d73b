"""Exact scalars: rationals, optionally extended by one square root.

Rational values are plain :class:`fractions.Fraction` (or ``int``) objects.
Values with an irrational part are :class:`QuadraticNumber` instances
``a + b*sqrt(d)``.  Arithmetic between two different radicands raises
:class:`~holosign.errors.MixedRadicals`; a result whose irrational part
cancels collapses back to a ``Fraction``.
"""

from fractions import Fraction
from math import isqrt

from .errors import MixedRadicals


def squarefree_split(n):
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` square-free."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    s, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return s, d * n


def _frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class QuadraticNumber:
    """``a + b*sqrt(d)`` with rational ``a``, non-zero rational ``b``, square-free ``d > 1``.

    Instances are only produced by :func:`quad`, which returns a ``Fraction``
    whenever the value is rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = a
        self.b = b
        self.d = d

    # -- coercion helpers -------------------------------------------------
    def _parts(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise MixedRadicals(
                    f"cannot combine sqrt({self.d}) and sqrt({other.d})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return other, 0
        return NotImplemented, None

    def __add__(self, other):
        a, b = self._parts(other)
        if a is NotImplemented:
            return NotImplemented
        return quad(self.a + a, self.b + b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._parts(other)
        if a is NotImplemented:
            return NotImplemented
        return quad(self.a - a, self.b - b, self.d)

    def __rsub__(self, other):
        a, b = self._parts(other)
        if a is NotImplemented:
            return NotImplemented
        return quad(a - self.a, b - self.b, self.d)

    def __mul__(self, other):
        a, b = self._parts(other)
        if a is NotImplemented:
            return NotImplemented
        d = self.d
        return quad(self.a * a + self.b * b * d, self.a * b + self.b * a, d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.d
        return quad(_frac(self.a) / norm, -_frac(self.b) / norm, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadraticNumber):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return quad(_frac(self.a) / other, _frac(self.b) / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Fraction(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- order ------------------------------------------------------------
    def sign(self):
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger of a^2 and d*b^2 wins
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def _cmp(self, other):
        diff = self - other
        return sign(diff)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        return False

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return True

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadraticNumber({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        babs = abs(self.b)
        root = f"sqrt({self.d})" if babs == 1 else f"{babs}*sqrt({self.d})"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {root}"


def quad(a, b, d):
    """Canonical constructor: collapse to ``Fraction`` when rational."""
    if b == 0 or d == 0:
        return _frac(a)
    if d == 1:
        return _frac(a) + b
    return QuadraticNumber(_frac(a), _frac(b), d)


def sqrt_scalar(n):
    """Exact square root of a non-negative integer."""
    s, d = squarefree_split(n)
    if d <= 1:
        return Fraction(s * d)
    return QuadraticNumber(Fraction(0), Fraction(s), d)


def sign(x):
    """Exact sign of a scalar as -1, 0 or 1."""
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def radicand(x):
    """Radicand of ``x`` (0 for rationals)."""
    return x.d if isinstance(x, QuadraticNumber) else 0


def is_rational(x):
    return not isinstance(x, QuadraticNumber)


def conjugate(x):
    if isinstance(x, QuadraticNumber):
        return QuadraticNumber(x.a, -x.b, x.d)
    return x


def rational_bounds(x, bits=64):
    """Rational ``(lo, hi)`` with ``lo <= x <= hi`` and ``hi - lo <= |b| * 2**-bits``."""
    if not isinstance(x, QuadraticNumber):
        x = _frac(x)
        return x, x
    scale = 1 << bits
    s = isqrt(x.d * scale * scale)
    lo_root = Fraction(s, scale)
    hi_root = Fraction(s + 1, scale)
    if x.b > 0:
        return x.a + x.b * lo_root, x.a + x.b * hi_root
    return x.a + x.b * hi_root, x.a + x.b * lo_root


def common_radicand(values):
    """The single radicand used by ``values`` (0 if all rational)."""
    d = 0
    for v in values:
        r = radicand(v)
        if r:
            if d and r != d:
                raise MixedRadicals(f"cannot combine sqrt({d}) and sqrt({r})")
            d = r
    return d


def format_scalar(x):
    if isinstance(x, QuadraticNumber):
        return str(x)
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sdiv(a, b):
    """Exact quotient of two scalars (never a float)."""
    if isinstance(a, QuadraticNumber) or isinstance(b, QuadraticNumber):
        return a / b
    return _frac(a) / b


def abs_upper(x):
    """A rational upper bound on ``|x|``."""
    lo, hi = rational_bounds(x, 32)
    return max(abs(lo), abs(hi))


def abs_lower(x):
    """A rational lower bound on ``|x|``; positive whenever ``x != 0``."""
    if x == 0:
        return Fraction(0)
    bits = 32
    while True:
        lo, hi = rational_bounds(x, bits)
        if lo > 0:
            return lo
        if hi < 0:
            return -hi
        bits *= 2
