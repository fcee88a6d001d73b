"""Bracket the critical lines of the Legendre-type recurrence

    f(n+2) = t (2n+3)/(n+2) f(n+1) - (n+1)/(n+2) f(n)

for a rational ``t`` (or ``1/sqrt(2)`` with ``--root-half``), and optionally
refine each bracket further.

    python scripts/critical_slopes_legendre.py --t 1/2 --width 1/10000 --refine 1/100000
"""

import argparse
import time
from fractions import Fraction

from holosign import Budget, X, critical_slopes, refine_bracket, sqrt_scalar
from holosign.recurrence import word_string


def legendre_pair(t):
    return (2 * X + 3) * t / (X + 2), -(X + 1) / (X + 2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t", default="1/2")
    ap.add_argument("--root-half", action="store_true", help="use t = 1/sqrt(2)")
    ap.add_argument("--width", default="1/10000")
    ap.add_argument("--refine", default=None, help="second, smaller target width")
    ap.add_argument("--budget", type=int, default=6_000_000)
    args = ap.parse_args()

    t = 1 / sqrt_scalar(2) if args.root_half else Fraction(args.t)
    P, Q = legendre_pair(t)
    budget = Budget(args.budget)
    start = time.perf_counter()
    rep = critical_slopes(P, Q, Fraction(args.width), budget)
    print(f"t = {t}: {len(rep.brackets)}/{rep.lines_expected} lines, {rep.steps_used} steps, "
          f"{time.perf_counter() - start:.1f}s")
    for b in rep.brackets:
        if args.refine:
            b, _ = refine_bracket(P, Q, b, Fraction(args.refine), budget)
        iv = b.slope_interval()
        span = b.homogeneous() if iv is None else [f"{float(v):.8f}" for v in iv]
        words = " | ".join(word_string(w) for w in (b.slope_words() or b.words))
        flag = "" if b.met_target else "  (target not met)"
        print(f"  l{b.line_index}: ({span[0]}, {span[1]})  residue {b.residue_class}  {words}{flag}")
    print(f"total {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
