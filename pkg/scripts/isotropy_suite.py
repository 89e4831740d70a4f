"""Seeded Hasse-Minkowski check: global isotropy decision against a witness search."""
import argparse
import random
import time

from cubicaudit.forms import QuadraticForm
from cubicaudit.localfields import find_isotropic_vector, is_isotropic_quadratic


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--bound", type=int, default=30)
    ap.add_argument("--cap", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    by_dim = {n: [0, 0, 0] for n in range(2, 7)}  # isotropic, anisotropic, witness missing
    worst = (0.0, None)
    for _ in range(args.count):
        n = rng.randint(2, 6)
        entries = [rng.choice([-1, 1]) * rng.randint(1, args.bound) for _ in range(n)]
        Q = QuadraticForm.diagonal(entries)
        if not is_isotropic_quadratic(Q):
            by_dim[n][1] += 1
            continue
        by_dim[n][0] += 1
        t0 = time.perf_counter()
        w = find_isotropic_vector(Q, args.cap)
        dt = time.perf_counter() - t0
        if w is None or Q(w) != 0:
            by_dim[n][2] += 1
        if dt > worst[0]:
            worst = (dt, (entries, w))
    print(f"{'dim':>3} {'isotropic':>10} {'anisotropic':>12} {'no witness':>11}")
    for n, (i, a, m) in by_dim.items():
        print(f"{n:>3} {i:>10} {a:>12} {m:>11}")
    print(f"slowest witness search: {worst[0]:.3f}s for {worst[1]}")


if __name__ == "__main__":
    main()
