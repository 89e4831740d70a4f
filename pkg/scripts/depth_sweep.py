"""Undecided rate of the p-adic solver as a function of the lifting depth."""
import argparse
import random
import time

from cubicaudit.forms import TernaryCubicForm
from cubicaudit.localfields import Status, solvable_padic_cubic


def sample(rng, n, bound):
    out = []
    while len(out) < n:
        c = [rng.randint(-bound, bound) for _ in range(10)]
        if rng.random() < 0.4:  # diagonal, with prime powers to force deep lifting
            c = [rng.choice([-1, 1]) * rng.choice([1, 2, 3, 4, 9, 25, 49]) for _ in range(3)] + [0] * 7
        if any(c):
            out.append(TernaryCubicForm(tuple(c)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--bound", type=int, default=9)
    ap.add_argument("--depths", default="1,2,3,4,6,8,12")
    ap.add_argument("--primes", default="2,3,5,7")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    forms = sample(random.Random(args.seed), args.count, args.bound)
    primes = [int(p) for p in args.primes.split(",")]
    print(f"{'depth':>5} {'solvable':>9} {'unsolvable':>11} {'undecided':>10} {'rate':>7} {'secs':>6}")
    for d in (int(x) for x in args.depths.split(",")):
        t0 = time.perf_counter()
        counts = {s: 0 for s in Status}
        for F in forms:
            for p in primes:
                counts[solvable_padic_cubic(F, p, d).status] += 1
        total = sum(counts.values())
        print(f"{d:>5} {counts[Status.SOLVABLE]:>9} {counts[Status.UNSOLVABLE]:>11} "
              f"{counts[Status.UNDECIDED]:>10} {counts[Status.UNDECIDED] / total:>7.1%} "
              f"{time.perf_counter() - t0:>6.1f}")


if __name__ == "__main__":
    main()
