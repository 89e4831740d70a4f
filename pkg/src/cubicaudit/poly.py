"""Sparse multivariate polynomials over Q with resultants and GCDs.

A :class:`MultiPoly` carries its ordered variable names; terms map exponent
tuples to nonzero :class:`~fractions.Fraction` coefficients.  Arithmetic
between polynomials over different variable lists works on the union of the
lists (left operand's order first).
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .exactnum import as_rational, gcd_many, lcm_many, rational_str


def _order_key(exps: tuple[int, ...]):
    # graded lexicographic, largest first when sorted ascending on the key
    return (-sum(exps), tuple(-e for e in exps))


class MultiPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean: dict[tuple[int, ...], Fraction] = {}
        n = len(self.vars)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {self.vars}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} not among {variables}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(v, variables) for v in variables)

    # -- variable handling ----------------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if variables == self.vars:
            return self
        idx = {v: i for i, v in enumerate(variables)}
        for v in self.used_vars():
            if v not in idx:
                raise ValueError(f"variable {v!r} is used but missing from {variables}")
        new_terms = {}
        for exps, c in self.terms.items():
            e = [0] * len(variables)
            for v, k in zip(self.vars, exps):
                if k:
                    e[idx[v]] = k
            new_terms[tuple(e)] = c
        return MultiPoly(variables, new_terms)

    def _coerce(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            return self, MultiPoly.constant(other, self.vars)
        if other.vars == self.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(merged), other.with_vars(merged)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        a, b = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            self._hash = hash(tuple(sorted(self.with_vars(used).terms.items())) + (used,))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"{var!r} not among {self.vars}") from None

    def degree(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self._index(var)
        return max((e[i] for e in self.terms), default=-1)

    def coeff(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of ``var**k`` as a polynomial (same variable list, var absent)."""
        if var not in self.vars:
            return self if k == 0 else MultiPoly(self.vars)
        i = self._index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1 :]] = c
        return MultiPoly(self.vars, terms)

    def monomial_coeff(self, exps: Mapping[str, int]) -> Fraction:
        e = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]))

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return min(self.terms.items(), key=lambda t: _order_key(t[0]))

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # -- evaluation -----------------------------------------------------------

    def __call__(self, *args, **kwargs):
        return self.evaluate(dict(zip(self.vars, args)) if args else kwargs)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at every variable; values may be any ring elements."""
        missing = [v for v in self.used_vars() if v not in values]
        if missing:
            raise ValueError(f"no values for {missing}")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            total = total + term
        return total

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Partial substitution by rationals or polynomials."""
        out = MultiPoly(self.vars)
        for e, c in self.terms.items():
            kept = tuple(0 if v in values else k for v, k in zip(self.vars, e))
            term = MultiPoly(self.vars, {kept: c})
            for v, k in zip(self.vars, e):
                if k and v in values:
                    term = term * (values[v] ** k)
            out = out + term
        return out

    # -- serialization --------------------------------------------------------

    def terms_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "coeff": rational_str(c)}
            for e, c in self.sorted_terms()
        ]

    def to_json(self) -> dict:
        return {"variables": list(self.vars), "terms": self.terms_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(data["variables"], {tuple(t["exponents"]): t["coeff"] for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
            else:
                body = rational_str(mag)
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={self.vars})"


# -- matrices and resultants --------------------------------------------------

def determinant(matrix: Sequence[Sequence[object]]):
    """Exact determinant of a square matrix over any commutative ring.

    Cofactor expansion with memoised minors; intended for small matrices with
    polynomial entries where division-based elimination is unavailable.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    memo: dict[tuple[int, int], object] = {}

    def is_zero(x):
        return (not x) if isinstance(x, MultiPoly) else x == 0

    def minor(row: int, mask: int):
        if row == n:
            return 1
        key = (row, mask)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for col in range(n):
            if mask >> col & 1:
                continue
            entry = matrix[row][col]
            if not is_zero(entry):
                sub = minor(row + 1, mask | (1 << col))
                if not is_zero(sub):
                    total = total + (entry * sub if sign > 0 else -(entry * sub))
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def rational_determinant(matrix: Sequence[Sequence[object]]) -> Fraction:
    """Gaussian elimination over Q."""
    a = [[as_rational(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


class SylvesterMatrix:
    """Sylvester matrix of two polynomials in one variable at formal degrees."""

    def __init__(self, entries: list[list[MultiPoly]], var: str, degrees: tuple[int, int]):
        self.entries = entries
        self.var = var
        self.degrees = degrees

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> MultiPoly:
        det = determinant(self.entries)
        if not isinstance(det, MultiPoly):
            det = MultiPoly.constant(det, self.entries[0][0].vars)
        return det

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "degrees": list(self.degrees),
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }


def sylvester(f: MultiPoly, g: MultiPoly, var: str, d_f: int, d_g: int) -> SylvesterMatrix:
    f, g = f._coerce(g)
    if f.degree(var) > d_f or g.degree(var) > d_g:
        raise ValueError(
            f"formal degrees ({d_f}, {d_g}) below true degrees "
            f"({f.degree(var)}, {g.degree(var)}) in {var}"
        )
    if d_f + d_g == 0:
        raise ValueError("Sylvester matrix of two constants is empty")
    n = d_f + d_g
    zero = MultiPoly(f.vars)
    fc = [f.coeff(var, d_f - k) for k in range(d_f + 1)]
    gc = [g.coeff(var, d_g - k) for k in range(d_g + 1)]
    rows = []
    for i in range(d_g):
        row = [zero] * n
        row[i : i + d_f + 1] = fc
        rows.append(row)
    for i in range(d_f):
        row = [zero] * n
        row[i : i + d_g + 1] = gc
        rows.append(row)
    return SylvesterMatrix(rows, var, (d_f, d_g))


def resultant(
    f: MultiPoly, g: MultiPoly, var: str, formal_degrees: tuple[int, int] | None = None
) -> MultiPoly:
    """Resultant in ``var``; true degrees unless ``formal_degrees`` is given."""
    f, g = f._coerce(g)
    if formal_degrees is None:
        d_f, d_g = max(f.degree(var), 0), max(g.degree(var), 0)
    else:
        d_f, d_g = formal_degrees
    if d_f == 0 and d_g == 0:
        return MultiPoly.constant(1, f.vars)
    if d_f == 0:
        return f ** d_g
    if d_g == 0:
        return g ** d_f
    return sylvester(f, g, var, d_f, d_g).determinant()


def det_prop37(a1, b1, c1, a2, b2, c2):
    """Closed form of the 4x4 Sylvester determinant of two formal quadratics."""
    return (a1 * c2 - a2 * c1) ** 2 + (a2 * b1 - a1 * b2) * (b1 * c2 - b2 * c1)


def sylvester_4x4(a1, b1, c1, a2, b2, c2) -> list[list[object]]:
    return [
        [a1, b1, c1, 0],
        [0, a1, b1, c1],
        [a2, b2, c2, 0],
        [0, a2, b2, c2],
    ]


# -- division and gcd ---------------------------------------------------------

def divide_exact(f: MultiPoly, g: MultiPoly) -> MultiPoly | None:
    """Return q with f = q*g, or None when g does not divide f."""
    f, g = f._coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lt_e, lt_c = g.leading_term()
    q_terms: dict[tuple[int, ...], Fraction] = {}
    r = f
    while r.terms:
        e, c = r.leading_term()
        if any(a < b for a, b in zip(e, lt_e)):
            return None
        m = tuple(a - b for a, b in zip(e, lt_e))
        qc = c / lt_c
        q_terms[m] = qc
        r = r - MultiPoly(f.vars, {m: qc}) * g
    return MultiPoly(f.vars, q_terms)


def normalize(f: MultiPoly) -> MultiPoly:
    """Integer primitive representative with positive leading coefficient."""
    if f.is_zero():
        return f
    den = lcm_many(c.denominator for c in f.terms.values())
    nums = [int(c * den) for c in f.terms.values()]
    g = gcd_many(abs(n) for n in nums)
    scale = Fraction(den, g)
    if f.leading_coefficient() < 0:
        scale = -scale
    return f * scale


def _content(f: MultiPoly, var: str) -> MultiPoly:
    coeffs = [f.coeff(var, k) for k in range(f.degree(var) + 1)]
    coeffs = [c for c in coeffs if c]
    return reduce(_gcd2, coeffs)


def _primitive_part(f: MultiPoly, var: str) -> MultiPoly:
    c = _content(f, var)
    q = divide_exact(f, c)
    assert q is not None
    return q


def _prem(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    db = b.degree(var)
    lcb = b.coeff(var, db)
    x = MultiPoly.var(var, a.vars)
    r = a
    while r and r.degree(var) >= db:
        dr = r.degree(var)
        r = lcb * r - r.coeff(var, dr) * x ** (dr - db) * b
    return r


def _gcd2(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    f, g = f._coerce(g)
    if f.is_zero():
        return normalize(g)
    if g.is_zero():
        return normalize(f)
    used = [v for v in f.vars if v in f.used_vars() or v in g.used_vars()]
    if not used:
        return MultiPoly.constant(1, f.vars)
    var = used[0]
    if f.degree(var) <= 0:
        return _gcd2(f, _content(g, var))
    if g.degree(var) <= 0:
        return _gcd2(_content(f, var), g)
    cont = _gcd2(_content(f, var), _content(g, var))
    a, b = _primitive_part(f, var), _primitive_part(g, var)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while True:
        r = _prem(a, b, var)
        if r.is_zero():
            h = b
            break
        if r.degree(var) == 0:
            h = MultiPoly.constant(1, f.vars)
            break
        a, b = b, _primitive_part(r, var)
    return normalize(cont * _primitive_part(h, var))


def gcd_multivariate(fs: Iterable[MultiPoly]) -> MultiPoly:
    """Normalized GCD of a nonempty list of polynomials."""
    fs = list(fs)
    if not fs:
        raise ValueError("gcd of an empty list")
    if all(f.is_zero() for f in fs):
        raise ValueError("gcd of all-zero polynomials is undefined")
    variables: tuple[str, ...] = ()
    for f in fs:
        variables += tuple(v for v in f.vars if v not in variables)
    fs = [f.with_vars(variables) for f in fs]
    out = reduce(_gcd2, fs, MultiPoly(variables))
    return out
