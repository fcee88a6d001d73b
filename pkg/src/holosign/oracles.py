"""Independent ground truth: closed forms, direct sums and a period detector.

Nothing here goes through the recurrence machinery, so the functions can be
used to check it.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .recurrence import rotate_to_phase, shortest_period, sign_sequence

MAX_PERIOD = 24


def legendre_value(t, n):
    """``2^-n * sum_k (-1)^k C(2n-2k, n-k) C(n-k, k) t^(n-2k)`` by direct summation."""
    total = 0
    for k in range(n // 2 + 1):
        term = comb(2 * n - 2 * k, n - k) * comb(n - k, k) * t ** (n - 2 * k)
        total = total - term if k % 2 else total + term
    return total * Fraction(1, 2**n)


def binom_cube_sum(n):
    """``sum_k (-1)^k k C(n, k)^3`` as an exact integer."""
    return sum((-1) ** k * k * comb(n, k) ** 3 for k in range(n + 1))


def explicit_solution_ex(f0, n):
    """Closed-form solution of ``f(n+2) = (n+2)/(n+1) f(n+1) - (n+3)/(n+1) f(n)``."""
    a, b = Fraction(f0[0]), Fraction(f0[1])
    m, r = divmod(n, 3)
    if r == 0:
        return (-1) ** m * ((Fraction(7, 2) * m + 1) * a - m * b)
    if r == 1:
        return (-1) ** m * (m * a + (m + 1) * b)
    return (-1) ** (m + 1) * ((Fraction(5, 2) * m + 3) * a - 2 * (m + 1) * b)


@dataclass(frozen=True)
class EmpiricalPeriodReport:
    word: tuple  # None when no period up to MAX_PERIOD fits
    stabilized_at: int
    horizon: int


def empirical_sign_period(inst, horizon, window=None):
    """Find the shortest period of ``sgn f`` on the last ``window`` terms before ``horizon``.

    A heuristic: a match says nothing about what happens past the horizon.
    The default window is half the horizon (at least ``4 * MAX_PERIOD``),
    long enough that slowly drifting oscillations break any short pattern.
    """
    if window is None:
        window = max(4 * MAX_PERIOD, horizon // 2)
    if not (horizon > window >= 4 * MAX_PERIOD):
        raise ValueError("need horizon > window >= 96")
    signs = sign_sequence(inst, inst.base, horizon)
    tail = signs[-window:]
    for p in range(1, MAX_PERIOD + 1):
        if all(tail[i] == tail[i - p] for i in range(p, window)):
            break
    else:
        return EmpiricalPeriodReport(None, None, horizon)
    # walk back while the pattern still holds
    idx = len(signs) - window
    while idx > 0 and signs[idx - 1] == signs[idx - 1 + p]:
        idx -= 1
    start = inst.base + idx
    word = rotate_to_phase(signs[idx : idx + p], start)
    return EmpiricalPeriodReport(shortest_period(word), start, horizon)
