"""From a ternary cubic to a system of quadrics in (X, Y, Z, W, M, N).

Multiplying F by x, y, z and substituting X=x^2, Y=y^2, Z=z^2, W=xy, M=xz,
N=yz gives three quadratic forms Fx, Fy, Fz; together with the six monomial
relations they cut out the image of the curve.  This module builds those
systems, transfers points back and forth, and runs the resultant and
common-factor checks used by the audit.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactnum import as_rational, rational_str
from .forms import SIX_VARS, ProjectivePoint, QuadraticForm, TernaryCubicForm, quadratic_form6
from .localfields import find_isotropic_vector, is_isotropic_quadratic
from .poly import MultiPoly, divide_exact, gcd_multivariate, normalize, resultant

log = logging.getLogger(__name__)

X, Y, Z, W, M, N = MultiPoly.gens(SIX_VARS)

ROLES = ("Fx", "Fy", "Fz", "Rel_WM_XN", "Rel_MN_ZW", "Rel_WN_YM", "Rel_W2_XY", "Rel_M2_XZ", "Rel_N2_YZ")

RELATIONS: dict[str, MultiPoly] = {
    "Rel_WM_XN": W * M - X * N,
    "Rel_MN_ZW": M * N - Z * W,
    "Rel_WN_YM": W * N - Y * M,
    "Rel_W2_XY": W**2 - X * Y,
    "Rel_M2_XZ": M**2 - X * Z,
    "Rel_N2_YZ": N**2 - Y * Z,
}

# which members each reduced system drops: variant z is the main one, x and y its mirrors
VARIANTS = {
    "z": ("Fz", "Rel_W2_XY"),
    "x": ("Fx", "Rel_N2_YZ"),
    "y": ("Fy", "Rel_M2_XZ"),
}

# the variable that appears at most linearly in each reduced system
ELIMINATION_VARIABLE = {"z": "W", "x": "N", "y": "M"}

# monomials carrying A1, A2, A3 in each multiplied form
_PROTECTED = {
    "Fx": (X * X, Y * W, Z * M),
    "Fy": (X * W, Y * Y, Z * N),
    "Fz": (X * M, Y * N, Z * Z),
}


@dataclass(frozen=True)
class QuadraticSystem:
    roles: tuple[str, ...]
    forms: tuple[QuadraticForm, ...]

    def __post_init__(self):
        if len(self.roles) != len(self.forms):
            raise ValueError("roles and forms differ in length")
        if len(set(self.roles)) != len(self.roles):
            raise ValueError("role tags must be unique")
        for r in self.roles:
            if r not in ROLES:
                raise ValueError(f"unknown role {r!r}")

    def __len__(self):
        return len(self.forms)

    def __getitem__(self, role: str) -> QuadraticForm:
        return self.forms[self.roles.index(role)]

    def polys(self) -> list[MultiPoly]:
        return [f.to_poly() for f in self.forms]

    def values(self, s: "SystemSolution") -> list[Fraction]:
        return [f(s.values) for f in self.forms]

    def is_solution(self, s: "SystemSolution") -> bool:
        return all(v == 0 for v in self.values(s))

    def to_json(self) -> dict:
        return {
            "variables": list(SIX_VARS),
            "members": [
                {
                    "role": r,
                    "poly": str(f.to_poly()),
                    "matrix": [[rational_str(c) for c in row] for row in f.matrix],
                }
                for r, f in zip(self.roles, self.forms)
            ],
        }


@dataclass(frozen=True)
class SystemSolution:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_rational(v) for v in self.values)
        if len(vals) != 6:
            raise ValueError("a system solution has six coordinates")
        if all(v == 0 for v in vals):
            raise ValueError("system solution must be nontrivial")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, *vals) -> "SystemSolution":
        if len(vals) == 1:
            vals = tuple(vals[0])
        return cls(tuple(vals))

    def __getattr__(self, name):
        if name in SIX_VARS:
            return self.values[SIX_VARS.index(name)]
        raise AttributeError(name)

    def to_json(self) -> list[str]:
        return [rational_str(v) for v in self.values]


# -- construction -------------------------------------------------------------

def _multiplied_polys(F: TernaryCubicForm) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    A = (None,) + F.coeffs
    Fx = (A[1] * X * X + A[2] * Y * W + A[3] * Z * M + A[4] * X * W + A[5] * X * M
          + A[6] * X * Y + A[7] * Y * M + A[8] * X * Z + A[9] * Z * W + A[10] * X * N)
    Fy = (A[1] * X * W + A[2] * Y * Y + A[3] * Z * N + A[4] * X * Y + A[5] * X * N
          + A[6] * Y * W + A[7] * Y * N + A[8] * Z * W + A[9] * Y * Z + A[10] * Y * M)
    Fz = (A[1] * X * M + A[2] * Y * N + A[3] * Z * Z + A[4] * X * N + A[5] * X * Z
          + A[6] * Y * M + A[7] * Y * Z + A[8] * Z * M + A[9] * Z * N + A[10] * Z * W)
    return Fx, Fy, Fz


def multiplied_forms(F: TernaryCubicForm) -> tuple[QuadraticForm, QuadraticForm, QuadraticForm]:
    """x*F, y*F, z*F rewritten in the degree-2 monomials of (x, y, z)."""
    if all(c == 0 for c in F.coeffs):
        raise ValueError("zero form")
    return tuple(quadratic_form6(p) for p in _multiplied_polys(F.normalize()))


def full_system(F: TernaryCubicForm) -> QuadraticSystem:
    fx, fy, fz = multiplied_forms(F)
    rel = [quadratic_form6(RELATIONS[r]) for r in ROLES[3:]]
    return QuadraticSystem(ROLES, (fx, fy, fz, *rel))


def reduced_system(F: TernaryCubicForm, variant: str = "z") -> QuadraticSystem:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of x, y, z; got {variant!r}")
    full = full_system(F)
    drop = VARIANTS[variant]
    keep = [(r, f) for r, f in zip(full.roles, full.forms) if r not in drop]
    return QuadraticSystem(tuple(r for r, _ in keep), tuple(f for _, f in keep))


def lift_point(F: TernaryCubicForm, P) -> SystemSolution:
    """(x^2, y^2, z^2, xy, xz, yz) for a point of F."""
    x, y, z = (as_rational(c) for c in (P.coords if isinstance(P, ProjectivePoint) else P))
    if F(x, y, z) != 0:
        raise ValueError(f"{P} is not on the curve")
    return SystemSolution((x * x, y * y, z * z, x * y, x * z, y * z))


def project_solution(F: TernaryCubicForm, s: SystemSolution) -> Optional[ProjectivePoint]:
    """Back from a system solution to a point of F, using a chart where X, Y or Z is nonzero."""
    if not full_system(F).is_solution(s):
        raise ValueError("not a solution of the full system")
    X0, Y0, Z0, W0, M0, N0 = s.values
    if X0 != 0:
        cand = (Fraction(1), W0 / X0, M0 / X0)
    elif Y0 != 0:
        cand = (W0 / Y0, Fraction(1), N0 / Y0)
    elif Z0 != 0:
        cand = (M0 / Z0, N0 / Z0, Fraction(1))
    else:
        log.warning("solution %s has X = Y = Z = 0; no chart applies", s.to_json())
        return None
    if F(*cand) != 0:
        log.warning("projected point %s does not lie on F", [rational_str(c) for c in cand])
        return None
    return ProjectivePoint.of(*cand)


def check_prop35_redundancy(F: TernaryCubicForm, s: SystemSolution, omitted: str = "Rel_W2_XY") -> bool:
    """Does s satisfy the one square relation it was not required to satisfy?

    Precondition: s solves every other member of the full system and X Y Z != 0.
    """
    if omitted not in ("Rel_W2_XY", "Rel_M2_XZ", "Rel_N2_YZ"):
        raise ValueError("omitted member must be one of the square relations")
    if s.X * s.Y * s.Z == 0:
        raise ValueError("precondition X0*Y0*Z0 != 0 violated")
    full = full_system(F)
    for role, val in zip(full.roles, full.values(s)):
        if role != omitted and val != 0:
            raise ValueError(f"s does not satisfy {role}")
    return full[omitted](s.values) == 0


# -- generic combinations and resultants ---------------------------------------

ALPHAS = tuple(f"a{i}" for i in range(1, 8))
BETAS = tuple(f"b{i}" for i in range(1, 8))
PARAM_VARS = SIX_VARS + ALPHAS + BETAS


def generic_combinations(sys: QuadraticSystem) -> tuple[MultiPoly, MultiPoly]:
    """sum alpha_i * member_i and sum beta_i * member_i, parameters as indeterminates."""
    if len(sys) != 7:
        raise ValueError(f"expected a 7-member reduced system, got {len(sys)}")
    members = [p.with_vars(PARAM_VARS) for p in sys.polys()]
    F1 = sum((MultiPoly.var(a, PARAM_VARS) * m for a, m in zip(ALPHAS, members)), MultiPoly(PARAM_VARS))
    F2 = sum((MultiPoly.var(b, PARAM_VARS) * m for b, m in zip(BETAS, members)), MultiPoly(PARAM_VARS))
    return F1, F2


def variant_of(sys: QuadraticSystem) -> Optional[str]:
    for name, drop in VARIANTS.items():
        if set(sys.roles) == set(ROLES) - set(drop):
            return name
    return None


@dataclass
class ResultantAudit:
    var: str
    formal: MultiPoly
    true_degree: MultiPoly
    degrees: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "variable": self.var,
            "formal_degrees": [2, 2],
            "formal_is_zero": self.formal.is_zero(),
            "true_degrees": list(self.degrees),
            "true_degree_is_zero": self.true_degree.is_zero(),
            "true_degree_terms": len(self.true_degree.terms),
        }


def formal_resultant_audit(F1: MultiPoly, F2: MultiPoly, var: str = "W") -> ResultantAudit:
    """Resultants in ``var`` at formal degrees (2, 2) and at the true degrees, side by side."""
    formal = resultant(F1, F2, var, (2, 2))
    true = resultant(F1, F2, var)
    return ResultantAudit(var, formal, true, (F1.degree(var), F2.degree(var)))


# -- common factors -------------------------------------------------------------

@dataclass
class CommonFactor:
    """Outcome of the common-factor case split: kind is none, linear or quadratic."""

    kind: str
    factor: MultiPoly
    proportional: list[bool] = field(default_factory=list)
    shape_aX_bY: Optional[bool] = None
    isotropic: Optional[bool] = None
    vector: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "factor": str(self.factor), "proportional": self.proportional}
        if self.kind == "linear":
            out["shape_aX_bY"] = self.shape_aX_bY
        if self.kind == "quadratic":
            out["isotropic"] = self.isotropic
            out["vector"] = list(self.vector) if self.vector is not None else None
        return out


def _is_aX_bY(c: MultiPoly) -> bool:
    c = c.with_vars(SIX_VARS)
    a = c.monomial_coeff({"X": 1})
    b = c.monomial_coeff({"Y": 1})
    return a != 0 and b != 0 and len(c.terms) == 2


def common_factor_analysis(members: QuadraticSystem | Sequence[MultiPoly], height_cap: int = 10_000) -> CommonFactor:
    polys = members.polys() if isinstance(members, QuadraticSystem) else list(members)
    polys = [p.with_vars(SIX_VARS) for p in polys]
    g = gcd_multivariate(polys)
    deg = g.total_degree()
    prop = []
    for p in polys:
        q = divide_exact(p, g) if not p.is_zero() else None
        prop.append(q is not None and q.is_constant() and not q.is_zero())
    if deg <= 0:
        return CommonFactor("none", normalize(g), prop)
    if deg == 1:
        return CommonFactor("linear", g, prop, shape_aX_bY=_is_aX_bY(g))
    Q = quadratic_form6(g)
    iso = is_isotropic_quadratic(Q, "global")
    vec = find_isotropic_vector(Q, height_cap) if iso else None
    return CommonFactor("quadratic", g, prop, isotropic=iso, vector=vec)


# -- rewriting with the first three relations -------------------------------------

def _lambda_box(bound: int, max_den: int) -> list[Fraction]:
    vals = {Fraction(n, d) for d in range(1, max_den + 1) for n in range(-bound * d, bound * d + 1)}
    return sorted(vals, key=lambda q: (q.denominator, abs(q.numerator), q < 0))


@dataclass
class RewriteResult:
    form: Optional[QuadraticForm]
    lambdas: Optional[tuple[Fraction, ...]]
    box: tuple[int, int]
    searched: int

    def to_json(self) -> dict:
        return {
            "found": self.form is not None,
            "lambdas": [rational_str(l) for l in self.lambdas] if self.lambdas is not None else None,
            "poly": str(self.form.to_poly()) if self.form is not None else None,
            "box": {"abs_bound": self.box[0], "max_denominator": self.box[1]},
            "searched": self.searched,
        }


def _mentions_all(p: MultiPoly, names: Iterable[str]) -> bool:
    idx = [p.vars.index(n) for n in names]
    return all(any(e[i] for e in p.terms) for i in idx)


def rewrite_with_relations(
    Fi: QuadraticForm,
    relations: Optional[Sequence[MultiPoly]] = None,
    role: Optional[str] = None,
    bound: int = 3,
    max_den: int = 3,
) -> RewriteResult:
    """Smallest Fi + sum lambda_j R_j in which W, M and N all occur.

    Candidates are tried in order of increasing complexity, so a form that
    already mentions all three comes back with every lambda = 0.  When ``role``
    names a multiplied form, its A1, A2, A3 monomials must keep their
    coefficients.
    """
    if relations is None:
        relations = [RELATIONS["Rel_WM_XN"], RELATIONS["Rel_MN_ZW"], RELATIONS["Rel_WN_YM"]]
    base = Fi.to_poly().with_vars(SIX_VARS)
    rels = [r.with_vars(SIX_VARS) for r in relations]
    protected = [next(iter(m.terms)) for m in _PROTECTED.get(role, ())]
    box = _lambda_box(bound, max_den)
    combos = sorted(
        itertools.product(box, repeat=len(rels)),
        key=lambda ls: (sum(l.denominator + abs(l.numerator) for l in ls if l), sum(1 for l in ls if l), ls),
    )
    for count, lams in enumerate(combos, 1):
        cand = base
        for lam, r in zip(lams, rels):
            if lam:
                cand = cand + lam * r
        if any(cand.terms.get(e, 0) != base.terms.get(e, 0) for e in protected):
            continue
        if _mentions_all(cand, ("W", "M", "N")):
            return RewriteResult(quadratic_form6(cand), tuple(lams), (bound, max_den), count)
    return RewriteResult(None, None, (bound, max_den), len(combos))
