"""Dense univariate polynomials over the scalar field.

Coefficients are stored low degree first in an immutable tuple with trailing
zeros stripped.  The zero polynomial has degree ``NEG_INF``.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .scalar import QuadraticNumber, abs_lower, abs_upper, common_radicand, sdiv, sign

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)
        self._hash = None

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    # -- queries ------------------------------------------------------------
    @property
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def radicand(self):
        return common_radicand(self.c)

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def __repr__(self):
        return f"Poly({list(self.c)!r})"

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-v for v in self.c)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly()
            return Poly(v * other for v in self.c)
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, a):
        """Divide every coefficient by the scalar ``a``."""
        return Poly(sdiv(v, a) for v in self.c)

    def monic(self):
        return self.scale(self.lc) if self.c else self

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db = len(other.c) - 1
        lb = other.lc
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            t = sdiv(rem[k + db], lb)
            quo[k] = t
            if t != 0:
                for j, v in enumerate(other.c):
                    rem[k + j] = rem[k + j] - t * v
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- transforms ---------------------------------------------------------
    def derivative(self):
        return Poly(i * v for i, v in enumerate(self.c) if i)

    def compose_affine(self, a, b):
        """``p(a*x + b)`` by Horner over polynomials."""
        lin = Poly((b, a))
        acc = Poly()
        for v in reversed(self.c):
            acc = acc * lin + v
        return acc

    def shift(self, b):
        """``p(x + b)`` via repeated synthetic division (Taylor shift)."""
        if b == 0 or len(self.c) <= 1:
            return self
        c = list(self.c)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] = c[j] + b * c[j + 1]
        return Poly(c)

    # -- asymptotics --------------------------------------------------------
    def cauchy_bound(self):
        """Integer ``B`` with every real root strictly below ``B`` in absolute value."""
        if len(self.c) <= 1:
            return 0
        lead = abs_lower(self.lc)
        m = max(abs_upper(v) for v in self.c[:-1])
        bound = 1 + m / lead
        return int(bound) + 1

    def natural_roots(self):
        """Sorted list of ``n >= 0`` with ``p(n) == 0``; ``p`` must be non-zero."""
        if not self.c:
            raise ValueError("zero polynomial has every root")
        d = self.radicand()
        if d:
            # a + b*sqrt(d) vanishes iff both rational parts do
            ra = Poly(v.a if isinstance(v, QuadraticNumber) else v for v in self.c)
            rb = Poly(v.b if isinstance(v, QuadraticNumber) else 0 for v in self.c)
            parts = [p for p in (ra, rb) if not p.is_zero()]
            roots = set(parts[0].natural_roots())
            for p in parts[1:]:
                roots &= set(p.natural_roots())
            return sorted(roots)
        ints, _ = integer_coeffs(self.c)
        roots = []
        while ints and ints[0] == 0:
            roots.append(0)
            ints = ints[1:]
        if len(ints) > 1:
            roots.extend(_positive_integer_roots(ints))
        return roots


def horner(coeffs, x):
    """Evaluate a low-to-high coefficient sequence at ``x``."""
    acc = 0
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def integer_coeffs(coeffs):
    """Scale rational coefficients to coprime integers; return ``(ints, factor)``.

    ``factor`` is the positive rational with ``ints == factor * coeffs``.
    """
    coeffs = [Fraction(v) for v in coeffs]
    den = reduce(lcm, (v.denominator for v in coeffs), 1)
    ints = [int(v * den) for v in coeffs]
    g = reduce(gcd, ints, 0)
    if g > 1:
        ints = [v // g for v in ints]
    return ints, Fraction(den, g or 1)


def _primitive(ints):
    g = reduce(gcd, ints, 0)
    if ints and ints[-1] < 0:
        g = -g
    return [v // g for v in ints] if g not in (0, 1) else list(ints)


def _pseudo_rem(a, b):
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [v * lb for v in r]
        for i, v in enumerate(b):
            r[i + k] -= lr * v
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_gcd(a, b):
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r) if r else []
    return a


def poly_gcd(p, q):
    """Monic gcd of two polynomials (zero if both are zero)."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return Poly.const(1)
    if common_radicand(p.c + q.c) == 0:
        a, _ = integer_coeffs(p.c)
        b, _ = integer_coeffs(q.c)
        g = _int_gcd(a, b)
        return Poly(g).monic()
    a, b = p.monic(), q.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def _taylor_shift_int(ints, m):
    c = list(ints)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += m * c[j + 1]
    return c


def _no_opposite_sign(coeffs, s):
    return all(sign(v) != -s for v in coeffs)


def positive_tail_start(p):
    """Least integer ``m >= 0`` with every coefficient of ``p(x + m)`` of the leading sign or zero.

    Then ``p`` has no real root beyond ``m``.  The property is inherited by
    larger shifts, so the least such ``m`` is found by bisection below the
    Cauchy bound (a shift past every root's modulus leaves only roots with
    negative real part, whose expanded product has no sign changes).
    """
    if p.degree <= 0:
        return 0
    s = sign(p.lc)
    if p.radicand():
        def ok(m):
            return _no_opposite_sign(p.shift(m).c, s)
    else:
        ints, _ = integer_coeffs(p.c)

        def ok(m):
            return _no_opposite_sign(_taylor_shift_int(ints, m), s)
    if ok(0):
        return 0
    lo, hi = 0, p.cauchy_bound()
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def eventual_sign_real(p):
    """``(s, B)``: ``p`` has constant non-zero sign ``s`` on the real half-line ``[B, oo)``."""
    if p.is_zero():
        return 0, 0
    m = positive_tail_start(p)
    if p.degree > 0 and p(m) == 0:
        m += 1
    return sign(p.lc), m


# -- integer roots -------------------------------------------------------------

_SCAN_LIMIT = 4096


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_gcd(a, b, p):
    a, b = _gf_trim([v % p for v in a]), _gf_trim([v % p for v in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            t = a[-1] * inv % p
            k = len(a) - len(b)
            for i, v in enumerate(b):
                a[i + k] = (a[i + k] - t * v) % p
            _gf_trim(a)
            if not a:
                break
        a, b = b, a
    return a


def _primes():
    n = 3
    while True:
        if all(n % q for q in range(3, int(n**0.5) + 1, 2)):
            yield n
        n += 2


def _positive_integer_roots(ints):
    """Roots ``n >= 1`` of an integer polynomial with non-zero constant term."""
    bound = Poly(ints).cauchy_bound()
    a0 = ints[0]
    if bound <= _SCAN_LIMIT:
        return [n for n in range(1, bound + 1) if a0 % n == 0 and horner(ints, n) == 0]
    # square-free part, then p-adic Newton lifting of the roots modulo a good prime
    f = Poly(ints)
    g = poly_gcd(f, f.derivative())
    if g.degree > 0:
        f = f.exact_div(g)
    f, _ = integer_coeffs(f.c)
    df = [i * v for i, v in enumerate(f) if i]
    for p in _primes():
        if f[-1] % p == 0 or len(_gf_gcd(f, df, p)) > 1:
            continue
        found = []
        for r in range(p):
            if horner(f, r) % p:
                continue
            m = p
            while m <= bound:
                m *= m
                r = (r - horner(f, r) * pow(horner(df, r), -1, m)) % m
            if 0 < r <= bound and horner(f, r) == 0:
                found.append(r)
        return sorted(found)


