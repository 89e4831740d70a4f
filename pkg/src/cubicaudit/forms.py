"""Ternary cubic forms, quadratic forms, binary cubics and projective points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import (
    as_rational,
    divisors,
    gcd_many,
    lcm_many,
    primitive_integer_vector,
    rational_str,
)
from .poly import MultiPoly

# monomial order of the ten cubic coefficients, as exponent triples in (x, y, z)
CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0),  # x^3
    (0, 3, 0),  # y^3
    (0, 0, 3),  # z^3
    (2, 1, 0),  # x^2 y
    (2, 0, 1),  # x^2 z
    (1, 2, 0),  # y^2 x
    (0, 2, 1),  # y^2 z
    (1, 0, 2),  # z^2 x
    (0, 1, 2),  # z^2 y
    (1, 1, 1),  # xyz
)
XYZ = ("x", "y", "z")


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical projective point: coprime integers, first nonzero positive."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords or all(c == 0 for c in self.coords):
            raise ValueError("projective point needs a nonzero coordinate")
        if primitive_integer_vector(self.coords) != tuple(self.coords):
            raise ValueError(f"{self.coords} is not in canonical form; use ProjectivePoint.of")

    @classmethod
    def of(cls, *values) -> "ProjectivePoint":
        if len(values) == 1 and isinstance(values[0], (tuple, list)):
            values = tuple(values[0])
        return cls(primitive_integer_vector(values))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def height(self) -> int:
        return max(abs(c) for c in self.coords)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class TernaryCubicForm:
    """Coefficients A1..A10 of a ternary cubic in the fixed monomial order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != 10:
            raise ValueError(f"a ternary cubic has 10 coefficients, got {len(coeffs)}")
        if all(c == 0 for c in coeffs):
            raise ValueError("the zero form is not a cubic")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def diagonal(cls, a1, a2, a3) -> "TernaryCubicForm":
        return cls((a1, a2, a3) + (0,) * 7)

    @classmethod
    def parse(cls, text: str) -> "TernaryCubicForm":
        return cls(tuple(Fraction(s.strip()) for s in text.split(",")))

    @classmethod
    def from_json(cls, data) -> "TernaryCubicForm":
        if isinstance(data, dict):
            data = data["cubic"]
        return cls(tuple(as_rational(c) for c in data))

    def to_json(self) -> dict:
        return {"cubic": [rational_str(c) for c in self.coeffs]}

    def __getitem__(self, i: int) -> Fraction:
        """1-based access matching the names A1..A10."""
        if not 1 <= i <= 10:
            raise IndexError(i)
        return self.coeffs[i - 1]

    def normalize(self) -> "TernaryCubicForm":
        den = lcm_many(c.denominator for c in self.coeffs)
        ints = [int(c * den) for c in self.coeffs]
        g = gcd_many(abs(i) for i in ints)
        lead = next(i for i in ints if i)
        sign = 1 if lead > 0 else -1
        return TernaryCubicForm(tuple(Fraction(sign * i // g) for i in ints))

    def is_normalized(self) -> bool:
        return self == self.normalize()

    def integer_coeffs(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("form is not integral; normalize first")
        return tuple(int(c) for c in self.coeffs)

    def __call__(self, x, y, z):
        total = 0
        for c, (i, j, k) in zip(self.coeffs, CUBIC_MONOMIALS):
            if c:
                total = total + c * x**i * y**j * z**k
        return total

    def as_poly(self, variables: Sequence[str] = XYZ) -> MultiPoly:
        return MultiPoly(variables, dict(zip(CUBIC_MONOMIALS, self.coeffs)))

    def gradient(self, x, y, z):
        """Partial derivatives (d/dx, d/dy, d/dz) at a point, exact."""
        gx = gy = gz = 0
        for c, (i, j, k) in zip(self.coeffs, CUBIC_MONOMIALS):
            if not c:
                continue
            if i:
                gx = gx + c * i * x ** (i - 1) * y**j * z**k
            if j:
                gy = gy + c * j * x**i * y ** (j - 1) * z**k
            if k:
                gz = gz + c * k * x**i * y**j * z ** (k - 1)
        return gx, gy, gz

    def permuted(self, perm: Sequence[int]) -> "TernaryCubicForm":
        """Form G with G(v) = F(w) where w[perm[i]] = v[i]."""
        poly = self.as_poly()
        terms = {}
        for e, c in poly.terms.items():
            ne = [0, 0, 0]
            for old_idx, k in enumerate(e):
                ne[perm.index(old_idx)] = k
            terms[tuple(ne)] = c
        new = MultiPoly(XYZ, terms)
        return TernaryCubicForm(tuple(new.terms.get(m, 0) for m in CUBIC_MONOMIALS))

    def __str__(self):
        return str(self.as_poly())


def eval_cubic(F: TernaryCubicForm, P) -> Fraction:
    coords = tuple(P)
    if len(coords) != 3:
        raise ValueError(f"ternary cubic needs 3 coordinates, got {len(coords)}")
    return as_rational(F(*map(as_rational, coords)))


def is_diagonal(F: TernaryCubicForm) -> tuple[int, int, int] | None:
    """(A1, A2, A3) when F = A1 x^3 + A2 y^3 + A3 z^3 with A1 A2 A3 != 0."""
    F = F.normalize()
    a = F.coeffs
    if any(a[3:]) or not (a[0] and a[1] and a[2]):
        return None
    return int(a[0]), int(a[1]), int(a[2])


# -- binary cubics ------------------------------------------------------------

@dataclass(frozen=True)
class BinaryCubicForm:
    """a u^3 + b u^2 v + c u v^2 + d v^3.

    The zero form is allowed: a boundary restriction of a ternary cubic can
    vanish identically, in which case every point of that line is a root.
    """

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != 4:
            raise ValueError("binary cubic needs 4 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, u, v):
        a, b, c, d = self.coeffs
        return a * u**3 + b * u**2 * v + c * u * v**2 + d * v**3

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]


def boundary_binary_cubics(F: TernaryCubicForm) -> tuple[BinaryCubicForm, BinaryCubicForm, BinaryCubicForm]:
    """Restrictions of F to z=0 (u=x, v=y), y=0 (u=x, v=z) and x=0 (u=y, v=z)."""
    A = (None,) + F.coeffs
    return (
        BinaryCubicForm((A[1], A[4], A[6], A[2])),
        BinaryCubicForm((A[1], A[5], A[8], A[3])),
        BinaryCubicForm((A[2], A[7], A[9], A[3])),
    )


def _rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Rational roots of a univariate polynomial, highest degree first."""
    coeffs = list(coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return []
    den = lcm_many(c.denominator for c in coeffs)
    ints = [int(c * den) for c in coeffs]
    roots = []
    if ints[-1] == 0:
        roots.append(Fraction(0))
        while ints and ints[-1] == 0:
            ints.pop()
        if len(ints) <= 1:
            return roots
    lead, const = ints[0], ints[-1]
    for p in divisors(const):
        for q in divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                val = 0
                for c in ints:
                    val = val * cand + c
                if val == 0:
                    roots.append(cand)
    return sorted(set(roots))


def rational_root_binary_cubic(G: BinaryCubicForm) -> ProjectivePoint | None:
    """A nontrivial rational projective zero (u, v) of G, if one exists."""
    a, b, c, d = G.coeffs
    if a == 0:
        return ProjectivePoint.of(1, 0)
    roots = _rational_roots([a, b, c, d])
    if not roots:
        return None
    t = roots[0]
    return ProjectivePoint.of(t, 1)


# -- quadratic forms ----------------------------------------------------------

class QuadraticForm:
    """Quadratic form v^T Q v given by a symmetric rational matrix."""

    __slots__ = ("matrix", "vars")

    def __init__(self, matrix: Sequence[Sequence[object]], variables: Sequence[str] | None = None):
        m = tuple(tuple(as_rational(x) for x in row) for row in matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("quadratic form matrix must be square")
        for i in range(n):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValueError("quadratic form matrix must be symmetric")
        self.matrix = m
        self.vars = tuple(variables) if variables else tuple(f"x{i}" for i in range(n))
        if len(self.vars) != n:
            raise ValueError("variable count does not match matrix size")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def diagonal(cls, entries: Iterable[object], variables=None) -> "QuadraticForm":
        entries = [as_rational(e) for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], variables)

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "QuadraticForm":
        if poly.terms and (not poly.is_homogeneous() or poly.total_degree() != 2):
            raise ValueError(f"{poly} is not a quadratic form")
        n = len(poly.vars)
        m = [[Fraction(0)] * n for _ in range(n)]
        for e, c in poly.terms.items():
            idx = [i for i, k in enumerate(e) for _ in range(k)]
            i, j = idx
            if i == j:
                m[i][i] += c
            else:
                m[i][j] += c / 2
                m[j][i] += c / 2
        return cls(m, poly.vars)

    def to_poly(self) -> MultiPoly:
        n = self.dim
        terms = {}
        for i in range(n):
            for j in range(i, n):
                c = self.matrix[i][j] * (1 if i == j else 2)
                if c:
                    e = [0] * n
                    e[i] += 1
                    e[j] += 1
                    terms[tuple(e)] = c
        return MultiPoly(self.vars, terms)

    def __call__(self, *v):
        if len(v) == 1 and isinstance(v[0], (tuple, list)):
            v = tuple(v[0])
        if len(v) != self.dim:
            raise ValueError(f"expected {self.dim} values, got {len(v)}")
        v = [as_rational(x) for x in v]
        return sum(
            (self.matrix[i][j] * v[i] * v[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def is_diagonal(self) -> bool:
        return all(self.matrix[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j)

    def __eq__(self, other):
        return isinstance(other, QuadraticForm) and self.matrix == other.matrix and self.vars == other.vars

    def __hash__(self):
        return hash((self.matrix, self.vars))

    def to_json(self) -> dict:
        return {
            "variables": list(self.vars),
            "matrix": [[rational_str(x) for x in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data) -> "QuadraticForm":
        return cls([[as_rational(x) for x in row] for row in data["matrix"]], data.get("variables"))

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return f"QuadraticForm({str(self)!r})"


SIX_VARS = ("X", "Y", "Z", "W", "M", "N")


def quadratic_form6(poly: MultiPoly) -> QuadraticForm:
    """Six-variable quadratic form over (X, Y, Z, W, M, N)."""
    return QuadraticForm.from_poly(poly.with_vars(SIX_VARS))


def unit_vector_roots(F: TernaryCubicForm) -> list[ProjectivePoint]:
    """Coordinate points that lie on F (exactly those whose cube coefficient vanishes)."""
    out = []
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        if eval_cubic(F, e) == 0:
            out.append(ProjectivePoint.of(e))
    return out

