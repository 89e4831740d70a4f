"""Height-bounded rational point search and exhaustive mod-m solution oracles."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .forms import CUBIC_MONOMIALS, ProjectivePoint, TernaryCubicForm

MAX_MODULUS = 400
_BLOCK = 1 << 20


@dataclass(frozen=True)
class HeightBound:
    H: int

    def __post_init__(self):
        if int(self.H) < 1:
            raise ValueError("height bound must be at least 1")


def _coerce_height(H) -> int:
    return HeightBound(int(H.H if isinstance(H, HeightBound) else H)).H


_SIEVE_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def _sieve_table(B: tuple[int, ...], p: int) -> np.ndarray:
    """table[u, v] is True iff some w mod p has G(u, v, w) = 0 mod p."""
    u = np.arange(p)[:, None, None]
    v = np.arange(p)[None, :, None]
    w = np.arange(p)[None, None, :]
    val = sum(b * u**i * v**j * w**k for b, (i, j, k) in zip(B, CUBIC_MONOMIALS) if b)
    return np.any(np.asarray(val) % p == 0, axis=2) if not np.isscalar(val) else np.full((p, p), val % p == 0)


def _combine_tables(tables, limit: int = 2000):
    """Fold the leading tables into one table modulo the product of their primes."""
    if len(tables) < 2:
        return tables
    mod, table = tables[0]
    used = 1
    for p, t in tables[1:]:
        if mod * p > limit:
            break
        a = np.arange(mod * p)
        table = table[(a % mod)[:, None], (a % mod)[None, :]] & t[(a % p)[:, None], (a % p)[None, :]]
        mod *= p
        used += 1
    return [(mod, table)] + list(tables[used:])


def _real_roots(c3: float, c2: np.ndarray, c1: np.ndarray, c0: np.ndarray) -> list[np.ndarray]:
    """Float estimates of the real roots in z of c3 z^3 + c2 z^2 + c1 z + c0.

    One real root from the depressed cubic (Cardano or trigonometric branch),
    Newton-polished, then the deflated quadratic for the other two.
    """
    a, b, c = c2 / c3, c1 / c3, c0 / c3
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    d = q * q / 4.0 + p**3 / 27.0
    with np.errstate(invalid="ignore", divide="ignore"):
        sd = np.sqrt(np.maximum(d, 0.0))
        cardano = np.cbrt(-q / 2.0 + sd) + np.cbrt(-q / 2.0 - sd)
        m = np.sqrt(np.maximum(-p / 3.0, 0.0))
        arg = np.where(m > 0, (3.0 * q) / (2.0 * p * np.where(m > 0, m, 1.0)), 0.0)
        trig = 2.0 * m * np.cos(np.arccos(np.clip(arg, -1.0, 1.0)) / 3.0)
    r = np.where(d >= 0, cardano, trig) - a / 3.0
    for _ in range(3):
        f = ((r + a) * r + b) * r + c
        df = (3.0 * r + 2.0 * a) * r + b
        with np.errstate(invalid="ignore", divide="ignore"):
            step = f / df
        r = np.where(np.isfinite(step), r - step, r)
    # z^2 + (a + r) z + (b + r (a + r)) = 0
    e = a + r
    disc = np.sqrt(np.maximum(e * e - 4.0 * (b + r * e), 0.0))
    return [r, (-e + disc) / 2.0, (-e - disc) / 2.0]


def _quadratic_roots(c2, c1, c0) -> list[np.ndarray]:
    with np.errstate(divide="ignore", invalid="ignore"):
        disc = c1 * c1 - 4.0 * c2 * c0
        sq = np.sqrt(np.maximum(disc, 0.0))
        quad = np.abs(c2) > 0
        r1 = np.where(quad, (-c1 + sq) / (2.0 * c2), np.where(np.abs(c1) > 0, -c0 / c1, 0.0))
        r2 = np.where(quad, (-c1 - sq) / (2.0 * c2), r1)
    return [np.nan_to_num(r1), np.nan_to_num(r2)]


def _exact_value(A: tuple[int, ...], x: int, y: int, z: int) -> int:
    return sum(a * x**i * y**j * z**k for a, (i, j, k) in zip(A, CUBIC_MONOMIALS) if a)


def search_points_cubic(F: TernaryCubicForm, H) -> list[ProjectivePoint]:
    """All projective points of F with coprime integer coordinates in [-H, H].

    Enumerates (x, y) and solves for z.  Pairs with no root for z modulo a few
    small primes are discarded first (an exact necessary condition); float
    root estimates only propose candidates and every point is verified exactly.
    """
    H = _coerce_height(H)
    A = F.normalize().integer_coeffs()
    # solve for a variable whose cube coefficient is nonzero when possible
    solve = next((i for i in (2, 1, 0) if A[i]), 2)
    perm = {2: (0, 1, 2), 1: (0, 2, 1), 0: (1, 2, 0)}[solve]
    B = (F.normalize().permuted(perm) if solve != 2 else F.normalize()).integer_coeffs()
    found: set[tuple[int, ...]] = set()

    def record(u, v, w):
        vec = [0, 0, 0]
        vec[perm[0]], vec[perm[1]], vec[perm[2]] = u, v, w
        if math.gcd(math.gcd(vec[0], vec[1]), vec[2]) == 1:
            found.add(ProjectivePoint.of(vec).coords)

    if _exact_value(B, 0, 0, 1) == 0:
        record(0, 0, 1)

    # most selective primes first; a table that is nearly all True filters nothing
    tables = [(p, _sieve_table(B, p)) for p in _SIEVE_PRIMES]
    tables = sorted((t for t in tables if t[1].mean() < 0.97), key=lambda t: t[1].mean())
    tables = _combine_tables(tables)
    ys = np.arange(-H, H + 1, dtype=np.int64)
    ys_mod = [(ys % p).astype(np.intp) for p, _ in tables]
    rows_per_block = max(1, _BLOCK // len(ys))
    for start in range(0, H + 1, rows_per_block):
        xs = np.arange(start, min(H + 1, start + rows_per_block), dtype=np.int64)
        xs_mod = [(xs % p).astype(np.intp) for p, _ in tables]
        if tables:
            keep = tables[0][1][xs_mod[0][:, None], ys_mod[0][None, :]]
        else:
            keep = np.ones((len(xs), len(ys)), dtype=bool)
        # canonical sign: u > 0, or u == 0 and v > 0
        if xs[0] == 0:
            keep[0] &= ys > 0
        ri, ci = np.nonzero(keep)
        for k in range(1, len(tables)):
            ok = tables[k][1][xs_mod[k][ri], ys_mod[k][ci]]
            ri, ci = ri[ok], ci[ok]
        if not len(ri):
            continue
        X = xs[ri].astype(np.float64)
        Y = ys[ci].astype(np.float64)
        c2 = B[7] * X + B[8] * Y
        c1 = B[4] * X * X + B[6] * Y * Y + B[9] * X * Y
        c0 = B[0] * X**3 + B[1] * Y**3 + B[3] * X * X * Y + B[5] * Y * Y * X
        if B[2]:
            roots = _real_roots(float(B[2]), c2, c1, c0)
        else:
            roots = _quadratic_roots(c2, c1, c0)
            for k in np.nonzero((c2 == 0) & (c1 == 0) & (c0 == 0))[0]:
                for w in range(-H, H + 1):
                    record(int(xs[ri[k]]), int(ys[ci[k]]), w)
        scale = abs(B[2]) * float(H) ** 3 + np.abs(c2) * float(H) ** 2 + np.abs(c1) * H + np.abs(c0)
        for root in roots:
            z = np.rint(root)
            val = ((B[2] * z + c2) * z + c1) * z + c0
            ok = (np.abs(z) <= H) & (np.abs(val) <= 1e-9 * scale + 0.5)
            for k in np.nonzero(ok)[0]:
                u, v, w = int(xs[ri[k]]), int(ys[ci[k]]), int(z[k])
                if _exact_value(B, u, v, w) == 0:
                    record(u, v, w)
    pts = [ProjectivePoint(c) for c in found]
    return sorted(pts, key=lambda P: (P.height(), P.coords))


def brute_force_points(F: TernaryCubicForm, H: int) -> list[ProjectivePoint]:
    """Triple loop over the box; test oracle for small H."""
    A = F.normalize().integer_coeffs()
    found = set()
    rng = range(-H, H + 1)
    for x in rng:
        for y in rng:
            for z in rng:
                if (x, y, z) == (0, 0, 0) or math.gcd(math.gcd(x, y), z) != 1:
                    continue
                if _exact_value(A, x, y, z) == 0:
                    found.add(ProjectivePoint.of(x, y, z).coords)
    return sorted((ProjectivePoint(c) for c in found), key=lambda P: (P.height(), P.coords))


# -- modular oracles ------------------------------------------------------------

def _residue_grid(A: tuple[int, ...], m: int, x: int) -> np.ndarray:
    y = np.arange(m, dtype=np.int64)[:, None]
    z = np.arange(m, dtype=np.int64)[None, :]
    x2, x3 = x * x % m, x * x * x % m
    y2, y3 = y * y % m, y * y % m * y % m
    z2, z3 = z * z % m, z * z % m * z % m
    a = [c % m for c in A]
    val = (a[0] * x3) % m
    val = (val + a[1] * y3) % m
    val = (val + a[2] * z3) % m
    val = (val + a[3] * x2 % m * y) % m
    val = (val + a[4] * x2 % m * z) % m
    val = (val + a[5] * y2 % m * x) % m
    val = (val + a[6] * y2 % m * z) % m
    val = (val + a[7] * z2 % m * x) % m
    val = (val + a[8] * z2 % m * y) % m
    val = (val + a[9] * x % m * (y * z % m)) % m
    return val


def solutions_mod(F: TernaryCubicForm, m: int, primitive_only: bool = True) -> list[tuple[int, int, int]]:
    """Every (x, y, z) in [0, m)^3 with F = 0 mod m; primitive means gcd(x, y, z, m) = 1."""
    if not isinstance(m, int) or m < 2 or m > MAX_MODULUS:
        raise ValueError(f"modulus must be an integer in [2, {MAX_MODULUS}], got {m!r}")
    A = F.normalize().integer_coeffs()
    out = []
    for x in range(m):
        grid = _residue_grid(A, m, x)
        for y, z in zip(*np.nonzero(grid == 0)):
            y, z = int(y), int(z)
            if primitive_only and math.gcd(math.gcd(math.gcd(x, y), z), m) != 1:
                continue
            out.append((x, y, z))
    return out


def exists_primitive_solution_mod(F: TernaryCubicForm, p: int, k: int) -> bool:
    """Exhaustive depth-first search for a primitive solution of F = 0 mod p^k.

    Solutions mod p^(j+1) reduce to solutions mod p^j, so extending only the
    surviving residues digit by digit is a complete search.
    """
    A = F.normalize().integer_coeffs()
    if k <= 0:
        return True

    def ok(v, j):
        return _exact_value(A, *v) % p**j == 0

    digits = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    stack = [((a, b, c), 1) for (a, b, c) in digits if (a, b, c) != (0, 0, 0) and ok((a, b, c), 1)]
    while stack:
        v, j = stack.pop()
        if j == k:
            return True
        pj = p**j
        for d in digits:
            w = (v[0] + pj * d[0], v[1] + pj * d[1], v[2] + pj * d[2])
            if ok(w, j + 1):
                stack.append((w, j + 1))
    return False
