"""Local solvability over R and Q_p: cubic forms, Hilbert symbols, quadratic isotropy.

The p-adic decision for cubics is a breadth-first search over primitive
residue vectors that stops at the first Hensel certificate, at the level where
every branch has died, or at ``max_depth``.  Quadratic forms get the full
Hasse-Minkowski local criteria.
"""
from __future__ import annotations

import enum
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .exactnum import (
    INF,
    as_rational,
    exact_sqrt,
    int_valuation,
    is_prime,
    legendre,
    prime_divisors,
    primitive_integer_vector,
    primes_up_to,
    rational_str,
    squarefree_integer,
    valuation,
)
from .forms import (
    ProjectivePoint,
    QuadraticForm,
    TernaryCubicForm,
    boundary_binary_cubics,
    is_diagonal,
    rational_root_binary_cubic,
)
from .poly import MultiPoly, rational_determinant

log = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 12
SURVIVOR_CAP = 200_000


# -- places -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: ``p = 0`` stands for the infinite place, otherwise p is prime."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")

    @classmethod
    def infinite(cls) -> "Place":
        return cls(0)

    @classmethod
    def finite(cls, p: int) -> "Place":
        if not isinstance(p, int) or p == 0:
            raise ValueError(f"{p!r} is not a prime")
        return cls(p)

    @classmethod
    def parse(cls, text) -> "Place":
        if isinstance(text, Place):
            return text
        s = str(text).strip().lower()
        if s in ("inf", "infinity", "oo", "r", "real"):
            return cls(0)
        try:
            return cls.finite(int(s))
        except ValueError:
            raise ValueError(f"cannot parse place {text!r}") from None

    @property
    def is_infinite(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "inf" if self.p == 0 else str(self.p)


INFINITE = Place(0)
PlaceLike = Union[Place, int, str]


def _place(v: PlaceLike) -> Place:
    if isinstance(v, Place):
        return v
    if isinstance(v, int):
        return Place.finite(v)
    return Place.parse(v)


# -- verdicts -----------------------------------------------------------------

class Status(str, enum.Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class HenselCertificate:
    """An integer vector with v_p(F(x)) > 2 v, v = v_p of the partial in coordinate ``index``.

    Newton iteration in that coordinate converges p-adically, so F has a
    Q_p-point congruent to ``point`` modulo p^(v+1).
    """

    point: tuple[int, int, int]
    p: int
    k: int
    index: int
    derivative_valuation: int
    value_valuation: Union[int, object]

    def verify(self, F: TernaryCubicForm) -> bool:
        A = F.normalize()
        if math.gcd(math.gcd(*self.point[:2]), self.point[2]) % self.p == 0:
            return False
        value = A(*self.point)
        deriv = A.gradient(*self.point)[self.index]
        if deriv == 0:
            return False
        v = valuation(deriv, self.p)
        vf = valuation(value, self.p)
        return v == self.derivative_valuation and vf > 2 * v

    def to_json(self) -> dict:
        return {
            "kind": "hensel",
            "point": list(self.point),
            "p": self.p,
            "k": self.k,
            "index": self.index,
            "derivative_valuation": self.derivative_valuation,
            "value_valuation": "inf" if self.value_valuation is INF else self.value_valuation,
        }


@dataclass(frozen=True)
class RationalWitness:
    """An exact rational zero of the form; certifies solvability at every place."""

    point: ProjectivePoint

    def verify(self, F: TernaryCubicForm) -> bool:
        return F(*self.point.coords) == 0

    def to_json(self) -> dict:
        return {"kind": "rational-point", "point": self.point.to_json()}


@dataclass(frozen=True)
class SignChangeCertificate:
    """f(t) = F(t*base + offset) changes sign on [lo, hi], hence has a real root there."""

    base: tuple[int, int, int]
    offset: tuple[int, int, int]
    lo: Fraction
    hi: Fraction

    def restriction(self, F: TernaryCubicForm, t) -> Fraction:
        t = as_rational(t)
        return as_rational(F(*(t * b + o for b, o in zip(self.base, self.offset))))

    def verify(self, F: TernaryCubicForm) -> bool:
        a, b = self.restriction(F, self.lo), self.restriction(F, self.hi)
        return self.lo < self.hi and a * b < 0

    def to_json(self) -> dict:
        return {
            "kind": "sign-change",
            "line": {"base": list(self.base), "offset": list(self.offset)},
            "interval": [rational_str(self.lo), rational_str(self.hi)],
        }


Certificate = Union[HenselCertificate, RationalWitness, SignChangeCertificate]


@dataclass(frozen=True)
class SolvabilityVerdict:
    place: Place
    status: Status
    certificate: Optional[Certificate] = None
    modulus_exponent: Optional[int] = None  # Unsolvable: no primitive zero mod p^N
    depth: Optional[int] = None  # Undecided: last level searched
    note: str = ""

    @property
    def solvable(self) -> bool:
        return self.status is Status.SOLVABLE

    def to_json(self) -> dict:
        out = {"place": str(self.place), "status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.modulus_exponent is not None:
            out["modulus"] = {"p": self.place.p, "exponent": self.modulus_exponent}
        if self.depth is not None:
            out["depth"] = self.depth
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class LocalSolvability:
    """Conjunction of per-place verdicts, ordered infinite place first then ascending p."""

    status: Status
    verdicts: list[SolvabilityVerdict] = field(default_factory=list)
    note: str = ""

    @property
    def value(self):
        """True, False, or None when undecided."""
        return {Status.SOLVABLE: True, Status.UNSOLVABLE: False}.get(self.status)

    def to_json(self) -> dict:
        out = {"result": self.status.value, "places": [v.to_json() for v in self.verdicts]}
        if self.note:
            out["note"] = self.note
        return out


# -- cubics -------------------------------------------------------------------

def _boundary_witness(F: TernaryCubicForm) -> Optional[ProjectivePoint]:
    """A rational zero on one of the coordinate lines z=0, y=0, x=0, if any."""
    embed = (lambda u, v: (u, v, 0), lambda u, v: (u, 0, v), lambda u, v: (0, u, v))
    for G, emb in zip(boundary_binary_cubics(F), embed):
        root = rational_root_binary_cubic(G)
        if root is not None:
            return ProjectivePoint.of(*emb(*root.coords))
    return None


def solvable_real_cubic(F: TernaryCubicForm) -> SolvabilityVerdict:
    """Always solvable: an exact boundary zero if there is one, else a sign change on (t, 1, 0)."""
    if all(c == 0 for c in F.coeffs):
        raise ValueError("zero form")
    F = F.normalize()
    wit = _boundary_witness(F)
    if wit is not None:
        return SolvabilityVerdict(INFINITE, Status.SOLVABLE, RationalWitness(wit))
    # no zero at (1,0,0) so A1 != 0 and f(t) = F(t,1,0) has odd degree;
    # no zero at (0,1,0) so f(0) = A2 != 0.  Walk away from 0 towards the end
    # whose limiting sign differs from f(0), doubling, until the sign flips.
    cert = SignChangeCertificate((1, 0, 0), (0, 1, 0), Fraction(0), Fraction(0))
    f0 = cert.restriction(F, 0)
    direction = 1 if (F[1] > 0) != (f0 > 0) else -1
    t = direction
    while (cert.restriction(F, t) > 0) == (f0 > 0):
        t *= 2
    lo, hi = sorted((Fraction(0), Fraction(t)))
    cert = SignChangeCertificate((1, 0, 0), (0, 1, 0), lo, hi)
    return SolvabilityVerdict(INFINITE, Status.SOLVABLE, cert)


def _vp(n: int, p: int):
    return INF if n == 0 else int_valuation(n, p)


def _hensel_check(A: TernaryCubicForm, vec: tuple[int, int, int], p: int, k: int) -> Optional[HenselCertificate]:
    value = int(A(*vec))
    grads = [int(g) for g in A.gradient(*vec)]
    best = None
    for i, g in enumerate(grads):
        if g:
            v = int_valuation(g, p)
            if best is None or v < best[1]:
                best = (i, v)
    if best is None:
        return None
    vf = _vp(value, p)
    if vf > 2 * best[1]:
        return HenselCertificate(vec, p, k, best[0], best[1], vf)
    return None


def _chart_vector(chart: int, s: int, t: int, p: int) -> tuple[int, int, int]:
    """Primitive vectors up to units: (1,s,t), (p s, 1, t), (p s, p t, 1)."""
    if chart == 0:
        return (1, s, t)
    if chart == 1:
        return (p * s, 1, t)
    return (p * s, p * t, 1)


def _chart_partials(A: TernaryCubicForm, chart: int, vec, p: int) -> tuple[int, int]:
    gx, gy, gz = (int(g) for g in A.gradient(*vec))
    if chart == 0:
        return gy, gz
    if chart == 1:
        return p * gx, gz
    return p * gx, p * gy


# -- large primes: a smooth F_p-point via univariate root finding -----------------

BFS_PRIME_LIMIT = 50


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a by monic-able m, coefficient lists low degree first."""
    a = [x % p for x in a]
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(base, e, m, p):
    out, b = [1], _pmod(base, m, p)
    while e:
        if e & 1:
            out = _pmulmod(out, b, m, p)
        b = _pmulmod(b, b, m, p)
        e >>= 1
    return out


def _pgcd(a, b, p):
    a, b = [x % p for x in a], [x % p for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def root_mod_p(coeffs: Sequence[int], p: int, seed: int = 0) -> Optional[int]:
    """One root in F_p of a polynomial (low degree first), odd prime p; None if there is none."""
    f = [c % p for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return 0
    if len(f) == 1:
        return None
    # g = gcd(f, z^p - z) splits into distinct linear factors
    zp = _ppowmod([0, 1], p, f, p)
    zp = zp + [0] * max(0, 2 - len(zp))
    zp[1] = (zp[1] - 1) % p
    g = _pgcd(f, zp, p)
    a = seed
    while len(g) > 2:
        a += 1
        h = _ppowmod([a % p, 1], (p - 1) // 2, g, p)
        h = h or [0]
        h[0] = (h[0] - 1) % p
        d = _pgcd(g, h, p)
        if 1 < len(d) < len(g):
            g = d
    if len(g) < 2:
        return None
    return (-g[0] * pow(g[1], -1, p)) % p


def _smooth_point_certificate(A: TernaryCubicForm, p: int, tries: int = 400) -> Optional[HenselCertificate]:
    """Scan lines x = 1, y = c for a root z mod p at which some partial is a unit."""
    a = [int(c) for c in A.coeffs]
    for c in range(min(p, tries)):
        # F(1, c, z) as a polynomial in z
        poly = [
            a[0] + a[1] * c**3 + a[3] * c + a[5] * c * c,
            a[4] + a[6] * c * c + a[9] * c,
            a[7] + a[8] * c,
            a[2],
        ]
        z = root_mod_p(poly, p, seed=c)
        if z is None:
            continue
        cert = _hensel_check(A, (1, c, z), p, 1)
        if cert is not None and cert.derivative_valuation == 0:
            return cert
    return None


def solvable_padic_cubic(F: TernaryCubicForm, p: int, max_depth: int = DEFAULT_MAX_DEPTH) -> SolvabilityVerdict:
    """Decide Q_p-solvability of F by lifting primitive residues level by level.

    Level k holds every chart parameter pair (s, t) mod p^k with F = 0 mod p^k.
    Children at level k+1 satisfy a linear congruence mod p (Taylor expansion
    is exact there for k >= 1), so they are generated directly.
    """
    place = Place.finite(p)
    F = F.normalize()
    wit = _boundary_witness(F)
    if wit is not None:
        return SolvabilityVerdict(place, Status.SOLVABLE, RationalWitness(wit))
    A = F
    if p > BFS_PRIME_LIMIT:
        cert = _smooth_point_certificate(A, p)
        if cert is not None:
            return SolvabilityVerdict(place, Status.SOLVABLE, cert)
        if p * p > 4 * SURVIVOR_CAP:
            return SolvabilityVerdict(place, Status.UNDECIDED, depth=1, note="large prime; no smooth point found")
    death = [None, None, None]
    level = {c: [(s, t) for s in range(p) for t in range(p)] for c in range(3)}
    level = {c: [st for st in pairs if int(A(*_chart_vector(c, *st, p))) % p == 0] for c, pairs in level.items()}
    for c in range(3):
        if not level[c]:
            death[c] = 1
    k = 1
    while True:
        for c in range(3):
            for s, t in level[c]:
                vec = _chart_vector(c, s, t, p)
                if A(*vec) == 0:
                    return SolvabilityVerdict(place, Status.SOLVABLE, RationalWitness(ProjectivePoint.of(*vec)))
                cert = _hensel_check(A, vec, p, k)
                if cert is not None:
                    return SolvabilityVerdict(place, Status.SOLVABLE, cert)
        if all(d is not None for d in death):
            return SolvabilityVerdict(place, Status.UNSOLVABLE, modulus_exponent=max(death))
        if k >= max_depth:
            return SolvabilityVerdict(place, Status.UNDECIDED, depth=k, note="max_depth reached")
        pk = p**k
        nxt = {}
        total = 0
        for c in range(3):
            children = []
            for s, t in level[c]:
                vec = _chart_vector(c, s, t, p)
                c0 = (int(A(*vec)) // pk) % p
                gs, gt = (g % p for g in _chart_partials(A, c, vec, p))
                if gt:
                    inv = pow(gt, -1, p)
                    for a in range(p):
                        b = (-(c0 + a * gs) * inv) % p
                        children.append((s + pk * a, t + pk * b))
                elif gs:
                    a = (-c0 * pow(gs, -1, p)) % p
                    children.extend((s + pk * a, t + pk * b) for b in range(p))
                elif c0 == 0:
                    children.extend((s + pk * a, t + pk * b) for a in range(p) for b in range(p))
            nxt[c] = children
            total += len(children)
            if not children and death[c] is None:
                death[c] = k + 1
        if total > SURVIVOR_CAP:
            return SolvabilityVerdict(place, Status.UNDECIDED, depth=k, note="survivor cap exceeded")
        level = nxt
        k += 1


def _d(f: MultiPoly, var: str) -> MultiPoly:
    i = f.vars.index(var)
    terms = {}
    for e, c in f.terms.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = terms.get(tuple(ne), 0) + c * e[i]
    return MultiPoly(f.vars, terms)


_QUAD_MONOMIALS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def singularity_resultant(F: TernaryCubicForm) -> int:
    """6x6 determinant of the partials of F and the gradient of their Jacobian.

    Up to a power of 2 this is the resultant of the three partials, so an odd
    prime divides it iff the partials share a zero over the algebraic closure
    of F_p (for p != 3: iff the reduction of F is singular).  Zero iff F is
    singular over Q.
    """
    f = F.normalize().as_poly()
    qs = [_d(f, v) for v in f.vars]
    m = [[_d(q, v) for v in f.vars] for q in qs]
    J = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    rows = qs + [_d(J, v) for v in f.vars]
    det = rational_determinant([[r.terms.get(e, 0) for e in _QUAD_MONOMIALS] for r in rows])
    return int(det)


SMALL_PRIME_BOUND = 13


def relevant_primes_cubic(F: TernaryCubicForm) -> Optional[list[int]]:
    """Primes outside which F is certainly Q_p-solvable; None if F is singular over Q.

    Diagonal: {2, 3} and the primes dividing A1 A2 A3.  Otherwise: all p <= 13
    together with the primes dividing :func:`singularity_resultant`.  Outside
    that set the reduction is a smooth plane cubic, which has an F_p-point by
    the Hasse-Weil bound, and a smooth point lifts.
    """
    F = F.normalize()
    diag = is_diagonal(F)
    if diag is not None:
        return sorted({2, 3} | set(prime_divisors(diag[0] * diag[1] * diag[2])))
    D = singularity_resultant(F)
    if D == 0:
        return None
    return sorted(set(primes_up_to(SMALL_PRIME_BOUND)) | set(prime_divisors(D)))


def _combine(verdicts: Sequence[SolvabilityVerdict]) -> Status:
    if any(v.status is Status.UNSOLVABLE for v in verdicts):
        return Status.UNSOLVABLE
    if any(v.status is Status.UNDECIDED for v in verdicts):
        return Status.UNDECIDED
    return Status.SOLVABLE


def everywhere_locally_solvable(F: TernaryCubicForm, max_depth: int = DEFAULT_MAX_DEPTH) -> LocalSolvability:
    F = F.normalize()
    verdicts = [solvable_real_cubic(F)]
    primes = relevant_primes_cubic(F)
    if primes is None:
        # singular over Q: no finite list of places is certified; settle it
        # with a boundary or small-height global point when there is one
        from .search import search_points_cubic

        pts = [p for p in [_boundary_witness(F)] if p is not None] or search_points_cubic(F, 30)
        if pts:
            wit = RationalWitness(pts[0])
            verdicts = [SolvabilityVerdict(INFINITE, Status.SOLVABLE, wit)]
            return LocalSolvability(Status.SOLVABLE, verdicts, "singular over Q; rational point found")
        return LocalSolvability(Status.UNDECIDED, verdicts, "singular over Q; relevant primes not certified")
    for p in primes:
        verdicts.append(solvable_padic_cubic(F, p, max_depth))
    return LocalSolvability(_combine(verdicts), verdicts)


# -- Hilbert symbols ----------------------------------------------------------

def hilbert_symbol(a, b, v: PlaceLike) -> int:
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    place = _place(v)
    if place.is_infinite:
        return -1 if (a < 0 and b < 0) else 1
    p = place.p
    # reduce to squarefree integers of the same square class
    a, b = squarefree_integer(a), squarefree_integer(b)
    alpha, u = int_valuation(a, p) if a % p == 0 else 0, a
    beta, w = int_valuation(b, p) if b % p == 0 else 0, b
    u //= p**alpha
    w //= p**beta
    if p != 2:
        eps = ((p - 1) // 2) % 2
        s = (-1) ** (alpha * beta * eps)
        if beta % 2:
            s *= legendre(u, p)
        if alpha % 2:
            s *= legendre(w, p)
        return s

    def e(x):
        return ((x - 1) // 2) % 2

    def om(x):
        return ((x * x - 1) // 8) % 2

    expo = e(u) * e(w) + alpha * om(w) + beta * om(u)
    return -1 if expo % 2 else 1


# -- quadratic forms ----------------------------------------------------------

def diagonalize(Q: QuadraticForm) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Entries d and an invertible T with T^T Q T = diag(d), by symmetric elimination."""
    n = Q.dim
    M = [list(row) for row in Q.matrix]
    T = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]  # columns = new basis

    def add_col(dst, src, c):
        # basis e_dst += c * e_src
        for r in range(n):
            T[r][dst] += c * T[r][src]
        for r in range(n):
            M[r][dst] += c * M[r][src]
        for r in range(n):
            M[dst][r] += c * M[src][r]

    def swap(i, j):
        for r in range(n):
            T[r][i], T[r][j] = T[r][j], T[r][i]
        M[i], M[j] = M[j], M[i]
        for r in range(n):
            M[r][i], M[r][j] = M[r][j], M[r][i]

    for i in range(n):
        piv = next((j for j in range(i, n) if M[j][j] != 0), None)
        if piv is None:
            pair = next(((j, l) for j in range(i, n) for l in range(j + 1, n) if M[j][l] != 0), None)
            if pair is None:
                break
            j, l = pair
            add_col(j, l, Fraction(1))  # new diagonal entry 2 M[j][l] != 0
            piv = j
        if piv != i:
            swap(i, piv)
        for j in range(i + 1, n):
            if M[i][j] != 0:
                add_col(j, i, -M[i][j] / M[i][i])
    return [M[i][i] for i in range(n)], T


def _local_square(x: int, p: int) -> bool:
    """Is the nonzero integer x a square in Q_p?"""
    a = int_valuation(x, p)
    if a % 2:
        return False
    u = x // p**a
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


def _local_isotropic(entries: list[int], p: int) -> bool:
    n = len(entries)
    if n <= 1:
        return False
    if n >= 5:
        return True
    d = squarefree_integer(math.prod(entries))
    if n == 2:
        return _local_square(-d, p)
    eps = 1
    for i in range(n):
        for j in range(i + 1, n):
            eps *= hilbert_symbol(entries[i], entries[j], p)
    if n == 3:
        return hilbert_symbol(-1, -d, p) == eps
    return (not _local_square(d, p)) or eps == hilbert_symbol(-1, -1, p)


def _square_classes(diag: Sequence[Fraction]) -> list[int]:
    return [squarefree_integer(x) for x in diag]


def is_isotropic_quadratic(Q: QuadraticForm, v: Union[PlaceLike, None] = "global") -> bool:
    """Nontrivial zero over the completion at v, or over Q when v is "global"."""
    diag, _ = diagonalize(Q)
    if any(x == 0 for x in diag):
        return True
    entries = _square_classes(diag)
    n = len(entries)
    if v is None or (isinstance(v, str) and v.lower() == "global"):
        if n <= 1:
            return False
        if not (any(e > 0 for e in entries) and any(e < 0 for e in entries)):
            return False
        primes = {2}
        for e in entries:
            primes |= set(prime_divisors(e))
        return all(_local_isotropic(entries, p) for p in sorted(primes))
    place = _place(v)
    if place.is_infinite:
        return n >= 2 and any(e > 0 for e in entries) and any(e < 0 for e in entries)
    return _local_isotropic(entries, place.p)


def _shell(h: int, dim: int) -> np.ndarray:
    """Integer vectors of sup-norm exactly h in dim coordinates, first nonzero positive."""
    rng = np.arange(-h, h + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * dim), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    pts = pts[np.abs(pts).max(axis=1) == h]
    first = pts[np.arange(len(pts)), np.argmax(pts != 0, axis=1)]
    return pts[first > 0]


def _search_diagonal(a: Sequence[int], cap: int) -> Optional[tuple[int, ...]]:
    """Search sum a_i w_i^2 = 0 with |w_i| <= cap, solving for the last coordinate."""
    *rest, last = a
    dim = len(rest)
    budget = 4_000_000
    for h in range(1, cap + 1):
        if (2 * h + 1) ** dim > budget * 4:
            return None
        pts = _shell(h, dim)
        if not len(pts):
            continue
        num = -((pts**2) * np.array(rest, dtype=np.int64)).sum(axis=1)
        ok = (num % last == 0)
        t = np.where(ok, num // last, -1)
        ok &= t >= 0
        r = np.rint(np.sqrt(np.where(ok, t, 0).astype(np.float64))).astype(np.int64)
        for cand in (r - 1, r, r + 1):
            hit = ok & (cand >= 0) & (cand * cand == t)
            idx = np.nonzero(hit)[0]
            if len(idx):
                i = idx[0]
                w = tuple(int(x) for x in pts[i]) + (int(cand[i]),)
                if sum(ai * wi * wi for ai, wi in zip(a, w)) == 0:
                    return w
    return None


def find_isotropic_vector(Q: QuadraticForm, height_cap: int = 10_000) -> Optional[tuple[int, ...]]:
    """A primitive integer zero of Q, or None when the height cap is reached first.

    Diagonalizes, then searches coordinate sub-forms of increasing size that
    are themselves isotropic; ternary sub-forms have small zeros, so the
    search is quick in practice.
    """
    if not is_isotropic_quadratic(Q, "global"):
        raise ValueError("form is anisotropic over Q; no nontrivial zero exists")
    diag, T = diagonalize(Q)
    n = Q.dim

    def lift(w_sub, idx):
        w = [Fraction(0)] * n
        for i, x in zip(idx, w_sub):
            w[i] = Fraction(x)
        vec = [sum(T[r][c] * w[c] for c in range(n)) for r in range(n)]
        out = primitive_integer_vector(vec)
        assert Q(out) == 0
        return out

    zero = [i for i, x in enumerate(diag) if x == 0]
    if zero:
        return lift([1], [zero[0]])
    # integral diagonal entries of the same square classes; scale back per coordinate
    ints, scale = [], []
    for x in diag:
        sq = squarefree_integer(x)
        ints.append(sq)
        scale.append(exact_sqrt(sq / x))  # x * scale^2 = sq
    for size in range(2, n + 1):
        for idx in itertools.combinations(range(n), size):
            sub = [ints[i] for i in idx]
            if not is_isotropic_quadratic(QuadraticForm.diagonal(sub), "global"):
                continue
            w = _search_diagonal(sub, height_cap)
            if w is not None:
                return lift([wi * scale[i] for wi, i in zip(w, idx)], idx)
            if size >= 3:
                log.warning("isotropic vector search hit the cap %d on sub-form %s", height_cap, sub)
    return None
