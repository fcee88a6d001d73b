"""Projective integer iteration of second-order recurrences.

Only signs and ratios of consecutive terms matter to the halting test, so the
steppers keep a primitive integer vector proportional (by a positive factor)
to ``(f(n), f(n+1))``.  Every update multiplies big integers by values of the
coefficient polynomials at ``n`` and then strips the common content, which
keeps the numbers close to the size of the true terms.
"""

from fractions import Fraction

try:
    # GMP division and gcd are several times faster on the long terms
    from gmpy2 import gcd, isqrt, mpz
except ImportError:  # pragma: no cover
    from math import gcd, isqrt

    mpz = int

from .errors import PoleAtPoint, PrecisionCapExceeded
from .numerics import compare_ratio_to_inv_log
from .poly import horner, integer_coeffs
from .scalar import QuadraticNumber, quad, radicand


def _int_sign(x):
    return (x > 0) - (x < 0)


def _quad_sign(x, y, d):
    sx, sy = _int_sign(x), _int_sign(y)
    if sx == 0 or sx == sy:
        return sy
    return sx if x * x > y * y * d else sy


class IntegerCoefficient:
    """A rational function over Q evaluated as ``num(n)/den(n)`` with integer parts."""

    __slots__ = ("num", "den")

    def __init__(self, R):
        self.num, self.den = R.integer_form()

    def at(self, n):
        d = horner(self.den, n)
        if d == 0:
            raise PoleAtPoint(f"pole at {n}")
        a = horner(self.num, n)
        return (a, d) if d > 0 else (-a, -d)


def _split_quadratic(coeffs, d):
    """Integer lists ``(xs, ys)`` and scale ``s > 0`` with ``coeffs = (xs + ys*sqrt d)/s``."""
    parts = []
    for v in coeffs:
        if isinstance(v, QuadraticNumber):
            parts.extend((v.a, v.b))
        else:
            parts.extend((Fraction(v), Fraction(0)))
    ints, factor = integer_coeffs(parts) if parts else ([], Fraction(1))
    return ints[0::2], ints[1::2], factor


class QuadraticCoefficient:
    """A rational function over Q(sqrt d) evaluated as ``(x + y sqrt d)/m`` with integer ``m > 0``."""

    __slots__ = ("nx", "ny", "dx", "dy", "d")

    def __init__(self, R, d):
        self.d = d
        self.nx, self.ny, fn = _split_quadratic(R.num.c, d)
        self.dx, self.dy, fd = _split_quadratic(R.den.c, d)
        # num/den == (N/fn)/(D/fd): fold fd/fn into the numerator
        ratio = fd / fn
        self.nx = [v * ratio.numerator for v in self.nx]
        self.ny = [v * ratio.numerator for v in self.ny]
        self.dx = [v * ratio.denominator for v in self.dx]
        self.dy = [v * ratio.denominator for v in self.dy]

    def at(self, n):
        d = self.d
        ax, ay = horner(self.nx, n), horner(self.ny, n)
        bx, by = horner(self.dx, n), horner(self.dy, n)
        norm = bx * bx - d * by * by
        if norm == 0:
            # sqrt d is irrational, so a zero norm means a zero denominator
            raise PoleAtPoint(f"pole at {n}")
        # (ax + ay r)(bx - by r) / norm
        x = ax * bx - d * ay * by
        y = ay * bx - ax * by
        if norm < 0:
            x, y, norm = -x, -y, -norm
        return x, y, norm


class IntegerPairStepper:
    """Iterates ``(u, v) ~ (f(n), f(n+1))`` over the integers."""

    def __init__(self, P, Q, n, fn, fn1):
        self.P = IntegerCoefficient(P)
        self.Q = IntegerCoefficient(Q)
        self.n = n
        fn, fn1 = Fraction(fn), Fraction(fn1)
        den = fn.denominator * fn1.denominator // gcd(fn.denominator, fn1.denominator)
        u, v = int(fn * den), int(fn1 * den)
        g = gcd(u, v)
        if g > 1:
            u, v = u // g, v // g
        self.u, self.v = mpz(u), mpz(v)
        # the last step multiplied the hidden positive scale by scale[0]/scale[1]
        self.scale = (1, 1)

    def step(self):
        n = self.n
        a, b = self.P.at(n)
        c, e = self.Q.at(n)
        L = b * e
        u, v = self.u, self.v
        w = a * e * v + c * b * u
        v = L * v
        g = gcd(L * c * b, v)
        if g > 1:
            g = gcd(g, w)
            if g > 1:
                v, w = v // g, w // g
        self.u, self.v = v, w
        self.scale = (L, g)
        self.n = n + 1

    def sign(self):
        return _int_sign(self.u)

    def next_sign(self):
        return _int_sign(self.v)

    def is_zero(self):
        return self.u == 0 and self.v == 0

    def exceeds_threshold(self, prev_coeff, max_precision):
        """Whether ``f(n+1)/f(n) > q(n) P(n-1)``, given ``f(n) != 0`` and ``P(n-1) > 0``.

        ``prev_coeff`` is ``(a, b)`` with ``P(n-1) = a/b`` and ``b > 0``.  The test
        is rewritten as ``(f(n+1)/(f(n) P(n-1)) - 1/2 - 1/(4n)) * 4n > 1/ln n``.
        """
        return self.ratio_exceeds(self.u, self.v, prev_coeff, self.n, max_precision)

    @staticmethod
    def ratio_exceeds(u, v, prev_coeff, n, max_precision):
        """The same test for terms ``u ~ f(n)`` and ``v ~ f(n+1)`` given directly."""
        a, b = prev_coeff
        ua = u * a
        num = 4 * n * v * b - (2 * n + 1) * ua
        return compare_ratio_to_inv_log(num, ua, n, max_precision) == ">"

    @staticmethod
    def scaled(u, k):
        return u * k

    @staticmethod
    def sign_of(u):
        return _int_sign(u)

    def current(self):
        return self.u

    def values(self):
        return Fraction(int(self.u)), Fraction(int(self.v))


def _qgcd(*xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
        if g == 1:
            break
    return g


class QuadraticPairStepper:
    """Iterates ``(u, v) ~ (f(n), f(n+1))`` over ``Z[sqrt d]``."""

    def __init__(self, P, Q, n, fn, fn1, d):
        self.d = d
        self.P = QuadraticCoefficient(P, d)
        self.Q = QuadraticCoefficient(Q, d)
        self.n = n
        xs, ys, _ = _split_quadratic((fn, fn1), d)
        self.ux, self.vx = map(mpz, xs)
        self.uy, self.vy = map(mpz, ys)
        self.scale = (1, 1)

    def step(self):
        n, d = self.n, self.d
        px, py, pm = self.P.at(n)
        qx, qy, qm = self.Q.at(n)
        ux, uy, vx, vy = self.ux, self.uy, self.vx, self.vy
        # w*pm*qm = (px + py r) qm v + (qx + qy r) pm u
        ax, ay = px * qm, py * qm
        bx, by = qx * pm, qy * pm
        wx = ax * vx + d * ay * vy + bx * ux + d * by * uy
        wy = ax * vy + ay * vx + bx * uy + by * ux
        L = pm * qm
        vx, vy = L * vx, L * vy
        g = _qgcd(L * abs(bx * bx - d * by * by), vx, vy, wx, wy)
        if g > 1:
            vx, vy, wx, wy = vx // g, vy // g, wx // g, wy // g
        else:
            g = 1
        self.ux, self.uy, self.vx, self.vy = vx, vy, wx, wy
        self.scale = (L, g)
        self.n = n + 1

    def sign(self):
        return _quad_sign(self.ux, self.uy, self.d)

    def next_sign(self):
        return _quad_sign(self.vx, self.vy, self.d)

    def is_zero(self):
        return not (self.ux or self.uy or self.vx or self.vy)

    def exceeds_threshold(self, prev_coeff, max_precision):
        return self.ratio_exceeds(
            (self.ux, self.uy), (self.vx, self.vy), prev_coeff, self.n, max_precision
        )

    def ratio_exceeds(self, u, v, prev_coeff, n, max_precision):
        px, py, pm = prev_coeff
        d = self.d
        (ux, uy), (vx, vy) = u, v
        # margin = (4n pm v - (2n+1) u a) / (u a), rationalized by the conjugate
        dx, dy = ux * px + d * uy * py, ux * py + uy * px
        nx = 4 * n * pm * vx - (2 * n + 1) * dx
        ny = 4 * n * pm * vy - (2 * n + 1) * dy
        zx, zy = nx * dx - d * ny * dy, ny * dx - nx * dy
        m = dx * dx - d * dy * dy
        if m < 0:
            zx, zy, m = -zx, -zy, -m
        return _quadratic_vs_inv_log(zx, zy, m, d, n, max_precision) == ">"

    @staticmethod
    def scaled(u, k):
        return u[0] * k, u[1] * k

    def sign_of(self, u):
        return _quad_sign(u[0], u[1], self.d)

    def current(self):
        return self.ux, self.uy

    def values(self):
        d = self.d
        return (
            quad(int(self.ux), int(self.uy), d),
            quad(int(self.vx), int(self.vy), d),
        )


def _quadratic_vs_inv_log(x, y, m, d, n, max_precision):
    """Compare ``(x + y sqrt d)/m`` (with ``m > 0``) against ``1/ln n``."""
    if _quad_sign(x, y, d) <= 0:
        return "<"
    bits = 0
    while bits <= max_precision:
        scale = 1 << bits
        t = isqrt(d * y * y * scale * scale)  # floor(|y| sqrt(d) * scale)
        if y >= 0:
            lo, hi = x * scale + t, x * scale + t + 1
        else:
            lo, hi = x * scale - t - 1, x * scale - t
        den = m * scale
        if lo > 0 and compare_ratio_to_inv_log(lo, den, n, max_precision) == ">":
            return ">"
        if compare_ratio_to_inv_log(hi, den, n, max_precision) == "<":
            return "<"
        bits = max(64, 2 * bits)
    raise PrecisionCapExceeded(f"could not separate a quadratic margin from 1/ln {n}")


def make_stepper(P, Q, n, fn, fn1):
    """Pick the integer or quadratic stepper for the session field of the inputs."""
    d = 0
    for r in (P.radicand(), Q.radicand(), radicand(fn), radicand(fn1)):
        if r:
            d = r
    if d:
        return QuadraticPairStepper(P, Q, n, fn, fn1, d)
    return IntegerPairStepper(P, Q, n, fn, fn1)


def coefficient_evaluator(R, d):
    """Evaluator producing the ``prev_coeff`` format of ``exceeds_threshold``."""
    return QuadraticCoefficient(R, d) if d else IntegerCoefficient(R)

