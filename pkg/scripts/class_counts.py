"""Number of diagonal cubic classes per cube-free product, fast rule against brute force."""
import argparse

from cubicaudit.exactnum import factorize, is_cube_free
from cubicaudit.jacobian import enumerate_diagonal_cubics, enumerate_diagonal_cubics_bruteforce


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=100)
    ap.add_argument("--no-check", action="store_true", help="skip the brute-force comparison")
    args = ap.parse_args()

    mismatches = 0
    print(f"{'m':>5} {'factors':<14} {'classes':>7}  representatives")
    for m in range(1, args.max + 1):
        if not is_cube_free(m):
            continue
        classes = enumerate_diagonal_cubics(m)
        flag = ""
        if not args.no_check:
            if sorted(d.coeffs for d in classes) != sorted(enumerate_diagonal_cubics_bruteforce(m)):
                mismatches += 1
                flag = "  MISMATCH"
        fac = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(m).items()) or "1"
        reps = " ".join(",".join(map(str, d.coeffs)) for d in classes)
        print(f"{m:>5} {fac:<14} {len(classes):>7}  {reps}{flag}")
    if not args.no_check:
        print(f"\nmismatches: {mismatches}")


if __name__ == "__main__":
    main()
