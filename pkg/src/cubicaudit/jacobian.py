"""Diagonal cubics A1 x^3 + A2 y^3 + A3 z^3, their Jacobian Y^2 = X^3 - 432 (A1 A2 A3)^2.

Cube roots s = cbrt(A1), t = cbrt(A2) live in the 9-dimensional algebra
Q[s, t]/(s^3 - A1, t^3 - A2).  The linear change of variables

    X = -9 A3 z,  Y = 27 A3 (s x - t y),  Z = 3/4 (s x + t y)

satisfies  Y^2 Z + 432 A3^2 Z^3 - X^3 = 729 A3^2 (A1 x^3 + A2 y^3 + A3 z^3),
and rescaling (X, Y) by ((s t)^2, A1 A2) moves the constant to
432 (A1 A2 A3)^2.  Both facts are checked symbolically by
:func:`verify_curve_identity`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactnum import (
    as_rational,
    cube_free_part,
    factorize,
    gcd_many,
    integer_cbrt,
    is_cube_free,
    rational_str,
)
from .poly import MultiPoly

CURVE_CONSTANT = 432


# -- the cube-root algebra -------------------------------------------------------

class RadicalAlgebraElement:
    """sum c[i][j] s^i t^j over 0 <= i, j <= 2, with s^3 = A1 and t^3 = A2."""

    __slots__ = ("c", "A1", "A2")

    def __init__(self, coords: Sequence, A1, A2):
        coords = tuple(as_rational(x) for x in coords)
        if len(coords) != 9:
            raise ValueError("algebra elements have 9 coordinates")
        self.c = coords
        self.A1, self.A2 = as_rational(A1), as_rational(A2)
        if self.A1 == 0 or self.A2 == 0:
            raise ValueError("A1 and A2 must be nonzero")

    # constructors
    @classmethod
    def scalar(cls, q, A1, A2) -> "RadicalAlgebraElement":
        return cls((q,) + (0,) * 8, A1, A2)

    @classmethod
    def monomial(cls, i: int, j: int, A1, A2, coeff=1) -> "RadicalAlgebraElement":
        c = [0] * 9
        c[3 * i + j] = coeff
        return cls(c, A1, A2)

    @classmethod
    def s(cls, A1, A2) -> "RadicalAlgebraElement":
        return cls.monomial(1, 0, A1, A2)

    @classmethod
    def t(cls, A1, A2) -> "RadicalAlgebraElement":
        return cls.monomial(0, 1, A1, A2)

    def _same(self, other) -> "RadicalAlgebraElement":
        if isinstance(other, RadicalAlgebraElement):
            if (other.A1, other.A2) != (self.A1, self.A2):
                raise ValueError("elements of different algebras")
            return other
        return RadicalAlgebraElement.scalar(as_rational(other), self.A1, self.A2)

    def __add__(self, other):
        o = self._same(other)
        return RadicalAlgebraElement([a + b for a, b in zip(self.c, o.c)], self.A1, self.A2)

    __radd__ = __add__

    def __neg__(self):
        return RadicalAlgebraElement([-a for a in self.c], self.A1, self.A2)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        o = self._same(other)
        out = [Fraction(0)] * 9
        for i1, j1 in itertools.product(range(3), repeat=2):
            a = self.c[3 * i1 + j1]
            if not a:
                continue
            for i2, j2 in itertools.product(range(3), repeat=2):
                b = o.c[3 * i2 + j2]
                if not b:
                    continue
                i, j = i1 + i2, j1 + j2
                coef = a * b
                if i >= 3:
                    i -= 3
                    coef *= self.A1
                if j >= 3:
                    j -= 3
                    coef *= self.A2
                out[3 * i + j] += coef
        return RadicalAlgebraElement(out, self.A1, self.A2)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RadicalAlgebraElement.scalar(1, self.A1, self.A2)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _mult_matrix(self) -> list[list[Fraction]]:
        cols = [(self * RadicalAlgebraElement.monomial(i, j, self.A1, self.A2)).c for i in range(3) for j in range(3)]
        return [[cols[c][r] for c in range(9)] for r in range(9)]

    def inverse(self) -> "RadicalAlgebraElement":
        """Solve self * u = 1; raises ZeroDivisionError if self is a zero divisor."""
        M = self._mult_matrix()
        n = 9
        aug = [row[:] + [Fraction(int(r == 0))] for r, row in enumerate(M)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("element is not invertible in the cube-root algebra")
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return RadicalAlgebraElement([aug[r][n] for r in range(n)], self.A1, self.A2)

    def __truediv__(self, other):
        o = self._same(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._same(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._same(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash((self.c, self.A1, self.A2))

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def scalar_value(self) -> Fraction:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.c[0]

    def to_json(self) -> dict:
        return {
            "A1": rational_str(self.A1),
            "A2": rational_str(self.A2),
            "coords": [rational_str(x) for x in self.c],
        }

    def __repr__(self):
        parts = []
        for i, j in itertools.product(range(3), repeat=2):
            v = self.c[3 * i + j]
            if v:
                mono = "".join(n if e == 1 else f"{n}^{e}" for n, e in (("s", i), ("t", j)) if e)
                parts.append(rational_str(v) + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"


def cube_roots(A1, A2, rational: bool = True) -> tuple[RadicalAlgebraElement, RadicalAlgebraElement]:
    """(s, t) in the algebra; with ``rational`` a perfect cube maps to its rational root."""
    out = []
    for k, A in ((0, A1), (1, A2)):
        A = as_rational(A)
        num, den = integer_cbrt(A.numerator), integer_cbrt(A.denominator)
        if rational and num is not None and den is not None:
            out.append(RadicalAlgebraElement.scalar(Fraction(num, den), A1, A2))
        else:
            out.append(RadicalAlgebraElement.monomial(1 - k, k, A1, A2))
    return out[0], out[1]


# -- curves and diagonal cubics ----------------------------------------------------

@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 = X^3 + a X + b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    def discriminant(self) -> Fraction:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def to_json(self) -> dict:
        return {"a": rational_str(self.a), "b": rational_str(self.b)}

    def __str__(self):
        terms = "Y^2 = X^3"
        if self.a:
            terms += f" {'+' if self.a > 0 else '-'} {rational_str(abs(self.a))}*X"
        if self.b:
            terms += f" {'+' if self.b > 0 else '-'} {rational_str(abs(self.b))}"
        return terms


class _Infinity:
    """The point at infinity of a Weierstrass curve."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"

    def to_json(self):
        return "infinity"


POINT_AT_INFINITY = _Infinity()


@dataclass(frozen=True)
class AffinePoint:
    X: object
    Y: object

    def to_json(self):
        conv = lambda v: v.to_json() if isinstance(v, RadicalAlgebraElement) else rational_str(v)
        return {"X": conv(self.X), "Y": conv(self.Y)}


CurvePoint = Union[AffinePoint, _Infinity]


def curve_contains(C: WeierstrassCurve, X, Y=None) -> bool:
    """Exact membership; the point at infinity is always on the curve."""
    if X is POINT_AT_INFINITY:
        return True
    if isinstance(X, AffinePoint):
        X, Y = X.X, X.Y
    if isinstance(X, RadicalAlgebraElement) or isinstance(Y, RadicalAlgebraElement):
        diff = Y * Y - (X * X * X + C.a * X + C.b)
        return (diff == 0) if not isinstance(diff, RadicalAlgebraElement) else diff.is_zero()
    X, Y = as_rational(X), as_rational(Y)
    return Y * Y == X**3 + C.a * X + C.b


@dataclass(frozen=True)
class DiagonalCubic:
    """A1 x^3 + A2 y^3 + A3 z^3 with nonzero, cube-free, jointly coprime integers."""

    A1: int
    A2: int
    A3: int

    def __post_init__(self):
        vals = (self.A1, self.A2, self.A3)
        if any(not isinstance(v, int) or v == 0 for v in vals):
            raise ValueError("diagonal coefficients must be nonzero integers")
        if not all(is_cube_free(v) for v in vals):
            raise ValueError(f"{vals} not cube-free")
        if gcd_many(abs(v) for v in vals) != 1:
            raise ValueError(f"{vals} not coprime")

    @classmethod
    def of(cls, a1, a2, a3) -> "DiagonalCubic":
        """Normalize any nonzero rational triple: clear denominators, strip cubes and the gcd."""
        return cls(*_reduce_triple([as_rational(a) for a in (a1, a2, a3)]))

    @classmethod
    def parse(cls, text: str) -> "DiagonalCubic":
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 3:
            raise ValueError("expected A1,A2,A3")
        return cls.of(*parts)

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.A1, self.A2, self.A3)

    @property
    def product(self) -> int:
        return self.A1 * self.A2 * self.A3

    def canonical(self) -> "DiagonalCubic":
        return DiagonalCubic(*canonical_triple(self.coeffs))

    def to_form(self):
        from .forms import TernaryCubicForm

        return TernaryCubicForm.diagonal(*self.coeffs)

    def to_json(self) -> dict:
        return {"diagonal": list(self.coeffs)}


def _reduce_triple(vals) -> tuple[int, int, int]:
    """Clear denominators, take cube-free parts, divide out the common gcd, repeat until stable."""
    if any(v == 0 for v in vals):
        raise ValueError("diagonal coefficients must be nonzero")
    from .exactnum import lcm_many

    den = lcm_many(Fraction(v).denominator for v in vals)
    ints = [int(Fraction(v) * den) for v in vals]
    while True:
        ints = [cube_free_part(v)[0] for v in ints]
        g = gcd_many(abs(v) for v in ints)
        if g == 1:
            return tuple(ints)
        ints = [v // g for v in ints]


def jacobian_curve(D: DiagonalCubic) -> WeierstrassCurve:
    return WeierstrassCurve(0, -CURVE_CONSTANT * D.product**2)


# -- point maps -------------------------------------------------------------------

def _algebra_coords(D: DiagonalCubic, P, s) -> list[RadicalAlgebraElement]:
    out = []
    for v in P:
        out.append(v if isinstance(v, RadicalAlgebraElement) else s._same(v))
    return out


def selmer_point_map(D: DiagonalCubic, P, rational_roots: bool = True, check: bool = True):
    """(x, y, z) on the cubic -> (X, Y, Z) on Y^2 Z + 432 A3^2 Z^3 = X^3."""
    s, t = cube_roots(D.A1, D.A2, rational_roots)
    x, y, z = _algebra_coords(D, P, s)
    if check:
        val = D.A1 * x * x * x + D.A2 * y * y * y + D.A3 * z * z * z
        if not val.is_zero():
            raise ValueError("point does not satisfy A1 x^3 + A2 y^3 + A3 z^3 = 0")
    A3 = D.A3
    X = -9 * A3 * z
    Y = 27 * A3 * (s * x - t * y)
    Z = Fraction(3, 4) * (s * x + t * y)
    return X, Y, Z


def inverse_point_map(D: DiagonalCubic, XYZ, rational_roots: bool = True):
    s, t = cube_roots(D.A1, D.A2, rational_roots)
    X, Y, Z = _algebra_coords(D, XYZ, s)
    A3 = D.A3
    x = (36 * A3 * Z + Y) / (54 * A3 * s)
    y = (36 * A3 * Z - Y) / (54 * A3 * t)
    z = X * Fraction(-1, 9 * A3)
    return x, y, z


def selmer_matrices(D: DiagonalCubic, rational_roots: bool = False):
    """The forward matrix and its claimed inverse, entries in the algebra."""
    s, t = cube_roots(D.A1, D.A2, rational_roots)
    A3 = D.A3
    zero = s * 0
    fwd = [
        [zero, zero, zero + (-9 * A3)],
        [27 * A3 * s, -27 * A3 * t, zero],
        [Fraction(3, 4) * s, Fraction(3, 4) * t, zero],
    ]
    inv = [
        [zero, 1 / (54 * A3 * s), 2 / (3 * s)],
        [zero, -1 / (54 * A3 * t), 2 / (3 * t)],
        [zero + Fraction(-1, 9 * A3), zero, zero],
    ]
    return fwd, inv


def matmul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    return [[sum((a[i][l] * b[l][j] for l in range(m)), a[0][0] * 0) for j in range(k)] for i in range(n)]


def matrix_product_is_identity(D: DiagonalCubic, rational_roots: bool = False) -> bool:
    fwd, inv = selmer_matrices(D, rational_roots)
    for prod in (matmul(fwd, inv), matmul(inv, fwd)):
        for i in range(3):
            for j in range(3):
                if prod[i][j] != int(i == j):
                    return False
    return True


def weierstrass_scaling(D: DiagonalCubic, rational_roots: bool = True):
    """Frozen factors (u, v): X_E = u X, Y_E = v Y with u = (s t)^2 and v = A1 A2."""
    s, t = cube_roots(D.A1, D.A2, rational_roots)
    return (s * t) * (s * t), s._same(D.A1 * D.A2)


def weierstrass_point(D: DiagonalCubic, P, rational_roots: bool = True) -> CurvePoint:
    """Image of a cubic point on Y^2 = X^3 - 432 (A1 A2 A3)^2; Z = 0 goes to infinity."""
    X, Y, Z = selmer_point_map(D, P, rational_roots)
    if Z.is_zero():
        return POINT_AT_INFINITY
    try:
        zinv = Z.inverse()
    except ZeroDivisionError:
        raise ValueError("Z is a zero divisor in the cube-root algebra; base point or flex") from None
    u, v = weierstrass_scaling(D, rational_roots)
    XE, YE = u * X * zinv, v * Y * zinv
    if XE.is_scalar() and YE.is_scalar():
        return AffinePoint(XE.scalar_value(), YE.scalar_value())
    return AffinePoint(XE, YE)


def _reduce_power(p: MultiPoly, var: str, k: int, replacement: MultiPoly) -> MultiPoly:
    """Rewrite var^k -> replacement until var has degree < k."""
    i = p.vars.index(var)
    replacement = replacement.with_vars(p.vars)
    while p.degree(var) >= k:
        out = MultiPoly(p.vars)
        for e, c in p.terms.items():
            if e[i] >= k:
                ne = list(e)
                ne[i] -= k
                out = out + MultiPoly(p.vars, {tuple(ne): c}) * replacement
            else:
                out = out + MultiPoly(p.vars, {e: c})
        p = out
    return p


def verify_curve_identity(D: DiagonalCubic, constant: int = CURVE_CONSTANT) -> bool:
    """Symbolic check that the composed map lands on Y^2 = X^3 - constant (A1 A2 A3)^2.

    Works in Q[s, t, x, y, z] modulo s^3 = A1, t^3 = A2 and the curve relation
    x^3 = -(A2 y^3 + A3 z^3) / A1, with s, t kept as generators even when A1
    or A2 is a cube.
    """
    V = ("s", "t", "x", "y", "z")
    s, t, x, y, z = MultiPoly.gens(V)
    A1, A2, A3 = D.coeffs
    X = -9 * A3 * z
    Y = 27 * A3 * (s * x - t * y)
    Z = Fraction(3, 4) * (s * x + t * y)
    XE = (s * t) ** 2 * X
    YE = A1 * A2 * Y
    expr = YE**2 * Z - XE**3 + constant * (A1 * A2 * A3) ** 2 * Z**3
    expr = _reduce_power(expr, "s", 3, MultiPoly.constant(A1, V))
    expr = _reduce_power(expr, "t", 3, MultiPoly.constant(A2, V))
    expr = _reduce_power(expr, "x", 3, Fraction(-1, A1) * (A2 * y**3 + A3 * z**3))
    return expr.is_zero()


# -- enumeration ------------------------------------------------------------------

def _orbit_scalings(vals: tuple[int, int, int]) -> set[tuple[int, int, int]]:
    """Triples reachable by global scaling with prime powers dividing the entries, reduced."""
    primes = sorted({p for v in vals for p in factorize(v)})
    out = set()
    for ks in itertools.product(range(3), repeat=len(primes)):
        lam = 1
        for p, k in zip(primes, ks):
            lam *= p**k
        out.add(_reduce_triple([v * lam for v in vals]))
    return out


def canonical_triple(vals) -> tuple[int, int, int]:
    """Least representative: smallest |A1 A2 A3|, then lexicographically least sorted positive triple."""
    vals = _reduce_triple([as_rational(v) for v in vals])
    vals = tuple(abs(v) for v in vals)  # x -> -x flips the sign of a coefficient
    cands = [tuple(sorted(c)) for c in _orbit_scalings(vals)]
    cands = [tuple(abs(v) for v in c) for c in cands]
    return min(cands, key=lambda c: (c[0] * c[1] * c[2], c))


def enumerate_diagonal_cubics(m: int) -> list[DiagonalCubic]:
    """Canonical diagonal cubics with A1 A2 A3 = |cube-free part of m|, one per class.

    Each prime q of m is placed independently: exponent 1 puts q on one
    coordinate; exponent 2 puts q^2 on one coordinate, which global scaling
    by q identifies with q on the other two.  Classes are the assignments up
    to permutation of the coordinates.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    m = abs(cube_free_part(m)[0])
    primes = sorted(factorize(m).items()) if m > 1 else []
    seen = set()
    out = []
    for pos in itertools.product(range(3), repeat=len(primes)):
        vals = [1, 1, 1]
        for (q, e), i in zip(primes, pos):
            vals[i] *= q**e
        c = canonical_triple(vals)
        if c not in seen:
            seen.add(c)
            out.append(DiagonalCubic(*c))
    return sorted(out, key=lambda d: d.coeffs)


def enumerate_diagonal_cubics_bruteforce(m: int) -> list[tuple[int, int, int]]:
    """Oracle: every ordered signed triple of divisors with product +-m, classes by explicit orbits."""
    if m == 0:
        raise ValueError("m must be nonzero")
    m = abs(cube_free_part(m)[0])
    divs = [d for d in range(1, m + 1) if m % d == 0]
    classes: list[set] = []
    for a, b, c in itertools.product(divs, repeat=3):
        if a * b * c != m:
            continue
        for signs in itertools.product((1, -1), repeat=3):
            t = (a * signs[0], b * signs[1], c * signs[2])
            if gcd_many(map(abs, t)) != 1:
                continue
            if any(t in cl for cl in classes):
                continue
            # full orbit: scalings, sign flips, permutations
            orbit = set()
            for r in _orbit_scalings(t):
                for perm in itertools.permutations(r):
                    for sg in itertools.product((1, -1), repeat=3):
                        orbit.add(tuple(v * s for v, s in zip(perm, sg)))
            classes.append(orbit)
    reps = []
    for cl in classes:
        good = [c for c in cl if all(v > 0 for v in c) and c[0] * c[1] * c[2] == m]
        reps.append(min(good))
    return sorted(reps)
