"""Reduced rational functions and their behaviour at large integer arguments."""

from fractions import Fraction

from .errors import NotProperAtInfinity, PoleAtPoint
from .poly import NEG_INF, Poly, eventual_sign_real, horner, integer_coeffs, poly_gcd
from .scalar import common_radicand, sdiv, sign

# Longest downward scan used to tighten a Cauchy-bound witness to integers.
_TIGHTEN_LIMIT = 4096


class RatFunc:
    """``num/den`` with ``gcd(num, den) == 1`` and ``den`` monic.

    Equality is structural on the normalized pair.
    """

    __slots__ = ("num", "den", "_int_form", "_hash")

    def __init__(self, num, den=None, *, reduced=False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
            reduced = True
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            if not reduced:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num, den = num.scale(lc), den.scale(lc)
        self.num = num
        self.den = den
        self._int_form = None
        self._hash = None

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly.const(1), reduced=True)

    @classmethod
    def x(cls):
        return cls.from_poly(Poly.x())

    # -- queries ------------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        return self.num.c[0] if self.num.c else Fraction(0)

    def radicand(self):
        return common_radicand(self.num.c + self.den.c)

    def integer_form(self):
        """``(num_ints, den_ints)`` with integer coefficients and the same ratio.

        Only available over the rationals; the denominator's leading
        coefficient is positive.
        """
        if self._int_form is None:
            if self.radicand():
                raise TypeError("integer form needs rational coefficients")
            n, fn = integer_coeffs(self.num.c) if self.num.c else ([], Fraction(1))
            d, fd = integer_coeffs(self.den.c)
            # num/den == (n/fn)/(d/fd) == (n*fd)/(d*fn)
            ratio = fd / fn
            n = [v * ratio.numerator for v in n]
            d = [v * ratio.denominator for v in d]
            self._int_form = (tuple(n), tuple(d))
        return self._int_form

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleAtPoint(f"pole at {x}")
        return sdiv(self.num(x), d)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self == RatFunc.from_poly(other)
        try:
            return self.is_constant() and self.constant_value() == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({list(self.num.c)!r}, {list(self.den.c)!r})"

    def __str__(self):
        from .parse import format_ratfunc

        return format_ratfunc(self)

    # -- field operations ---------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        return RatFunc.from_poly(Poly.const(other))

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc(0)
        if other.is_constant():
            return RatFunc(self.num * other.constant_value(), self.den, reduced=True)
        if self.is_constant():
            return RatFunc(other.num * self.constant_value(), other.den, reduced=True)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num.exact_div(g1), other.den.exact_div(g1)
        n2, d1 = other.num.exact_div(g2), self.den.exact_div(g2)
        return RatFunc(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e, reduced=True)

    # -- transforms ---------------------------------------------------------
    def shift(self, c):
        """``R(x + c)``."""
        if c == 0:
            return self
        return RatFunc(self.num.shift(c), self.den.shift(c), reduced=True)

    def compose_affine(self, a, b):
        """``R(a*x + b)``; affine substitution keeps numerator and denominator coprime."""
        return RatFunc(self.num.compose_affine(a, b), self.den.compose_affine(a, b), reduced=True)

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)


# -- module-level operations ------------------------------------------------

def eval_at_integer(R, n):
    """Exact value ``R(n)``; raises :class:`PoleAtPoint` at a pole."""
    if not R.radicand():
        num, den = R.integer_form()
        d = horner(den, n)
        if d == 0:
            raise PoleAtPoint(f"pole at {n}")
        return Fraction(horner(num, n), d)
    return R(n)


def degree_theta(R):
    """``deg num - deg den``; ``NEG_INF`` for the zero function."""
    if R.is_zero():
        return NEG_INF
    return R.num.degree - R.den.degree


def asymptotic_sign(R):
    return sign(R.num.lc) if not R.is_zero() else 0


def series_at_infinity(R, k):
    """First ``k`` coefficients of ``R`` expanded in powers of ``1/x``."""
    if degree_theta(R) > 0:
        raise NotProperAtInfinity("positive degree has no expansion at infinity")
    D = R.den.degree
    # R = N(y)/M(y) with y = 1/x, N and M read off by reversing coefficient order
    N = [0] * (D + 1)
    for i, v in enumerate(R.num.c):
        N[D - i] = v
    M = [R.den.c[D - j] for j in range(D + 1)]
    out = []
    rem = list(N) + [0] * k
    m0 = M[0]
    for i in range(k):
        a = sdiv(rem[i], m0) if rem[i] != 0 else Fraction(0)
        out.append(a)
        if a != 0:
            for j in range(1, len(M)):
                if i + j < len(rem):
                    rem[i + j] = rem[i + j] - a * M[j]
    return out


def max_nat_root_or_pole(P, Q):
    """Largest natural zero or pole of ``P`` or ``Q``, or ``None``."""
    best = None
    for p in (P.num, P.den, Q.num, Q.den):
        if p.is_zero():
            continue
        roots = p.natural_roots()
        if roots and (best is None or roots[-1] > best):
            best = roots[-1]
    return best


def compose_affine(R, tau, N):
    return R.compose_affine(tau, N)


def eventual_integer_sign(R):
    """``(s, N)`` with ``sign(R(n)) == s`` and no pole for every integer ``n >= N``."""
    if R.is_zero():
        return 0, 0
    s = asymptotic_sign(R)
    _, bn = eventual_sign_real(R.num)
    _, bd = eventual_sign_real(R.den)
    N = max(bn, bd, 0)
    floor = N - _TIGHTEN_LIMIT
    while N > 0 and N - 1 > floor:
        n = N - 1
        d = R.den(n)
        if d == 0 or sign(R.num(n)) * sign(d) != s:
            break
        N = n
    return s, N


def eventual_compare(R1, R2):
    """``(rel, N)`` such that ``R1(n) rel R2(n)`` for every integer ``n >= N``."""
    diff = R1 - R2
    if diff.is_zero():
        return "=", 0
    s, N = eventual_integer_sign(diff)
    # the comparison also needs both operands to be defined
    for R in (R1, R2):
        N = max(N, _past_poles(R, 0))
    return (">" if s > 0 else "<"), N


def _past_poles(R, start):
    roots = R.den.natural_roots() if R.den.degree > 0 else []
    return max([start] + [r + 1 for r in roots])


def eventual_monotonicity(R):
    """``(mode, N)``: ``R`` is increasing/decreasing/constant on the reals ``>= N``."""
    dR = R.derivative()
    if dR.is_zero():
        return "constant", 0
    s = asymptotic_sign(dR)
    _, bn = eventual_sign_real(dR.num)
    _, bd = eventual_sign_real(dR.den)
    return ("increasing" if s > 0 else "decreasing"), max(bn, bd, 0)


X = RatFunc.x()
