"""Census of halted sign-word lengths over random rational instances.

Draws pairs from several families (hyperbolic, loxodromic, and elliptic with
a tabulated angle), runs the partial algorithm on random integer initial
values and tallies the shortest-period lengths of the halted words.
"""

import argparse
import random
from collections import Counter
from fractions import Fraction

from holosign import Budget, Halted, HolonomicInstance, RatFunc, X, classify, ultimate_sign


def random_pair(rng):
    family = rng.choice(["hyperbolic", "loxodromic", "elliptic", "cubic"])
    if family == "hyperbolic":
        return RatFunc(1), RatFunc(Fraction(-rng.randint(1, 24), 100))
    if family == "loxodromic":
        return X + rng.randint(1, 4), Fraction(rng.randint(1, 8), 4) * (X + rng.randint(1, 5))
    if family == "cubic":
        return RatFunc(1), -rng.randint(1, 4) * X**3 - rng.randint(0, 3)
    alpha0 = rng.choice([Fraction(-1), Fraction(-1, 2), Fraction(-1, 3)])
    c = Fraction(rng.randint(-4, 12), 4)
    d = rng.randint(1, 3)
    return RatFunc(1), alpha0 * (1 + c / ((X + d) * (X + d + 1)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--budget", type=int, default=50_000)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    lengths, kinds = Counter(), Counter()
    for _ in range(args.samples):
        P, Q = random_pair(rng)
        f0 = (rng.randint(-9, 9), rng.randint(-9, 9))
        if f0 == (0, 0):
            continue
        out = ultimate_sign(HolonomicInstance(P, Q, f0), Budget(args.budget))
        kinds[(classify(P, Q).label(), out.kind)] += 1
        if isinstance(out, Halted):
            lengths[len(out.word)] += 1
    print("outcomes by type:")
    for (label, kind), n in sorted(kinds.items()):
        print(f"  {label:28s} {kind:16s} {n}")
    print("halted word lengths:", dict(sorted(lengths.items())))
    print("all lengths in {1,2,3,4,6,8,12}:", set(lengths) <= {1, 2, 3, 4, 6, 8, 12})


if __name__ == "__main__":
    main()
