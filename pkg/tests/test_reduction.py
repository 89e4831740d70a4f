from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicaudit.forms import ProjectivePoint, TernaryCubicForm
from cubicaudit.poly import MultiPoly
from cubicaudit.reduction import (
    ELIMINATION_VARIABLE,
    QuadraticSystem,
    SystemSolution,
    check_prop35_redundancy,
    common_factor_analysis,
    formal_resultant_audit,
    full_system,
    generic_combinations,
    lift_point,
    multiplied_forms,
    project_solution,
    reduced_system,
    rewrite_with_relations,
)
from strategies import cubics

x, y, z = MultiPoly.gens(("x", "y", "z"))
SUB = dict(X=x * x, Y=y * y, Z=z * z, W=x * y, M=x * z, N=y * z)
FERMAT = TernaryCubicForm.diagonal(1, 1, -1)


@given(cubics)
@settings(max_examples=50, deadline=None)
def test_substitution_identity(F):
    F = F.normalize()
    f = F.as_poly()
    for q, v in zip(multiplied_forms(F), (x, y, z)):
        assert q.to_poly().evaluate(SUB) == v * f


def test_relations_vanish_on_veronese():
    full = full_system(FERMAT)
    for role in full.roles[3:]:
        assert full[role].to_poly().evaluate(SUB) == 0


def test_system_shapes():
    full = full_system(FERMAT)
    assert len(full) == 9
    for v, dropped in (("z", {"Fz", "Rel_W2_XY"}), ("x", {"Fx", "Rel_N2_YZ"}), ("y", {"Fy", "Rel_M2_XZ"})):
        red = reduced_system(FERMAT, v)
        assert len(red) == 7 and set(full.roles) - set(red.roles) == dropped
        for p in red.polys():
            assert p.degree(ELIMINATION_VARIABLE[v]) <= 1
    with pytest.raises(ValueError):
        reduced_system(FERMAT, "w")


def test_system_validation():
    fx = full_system(FERMAT).forms[0]
    with pytest.raises(ValueError):
        QuadraticSystem(("Fx", "Fx"), (fx, fx))
    with pytest.raises(ValueError):
        SystemSolution.of(0, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("pt", [(1, 0, 1), (0, 1, 1), (1, -1, 0)])
def test_round_trip_fermat(pt):
    s = lift_point(FERMAT, pt)
    assert full_system(FERMAT).is_solution(s)
    assert project_solution(FERMAT, s) == ProjectivePoint.of(pt)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 9))
def test_round_trip_planted(a, b, c):
    # a curve through (a, b, c): x^3 + y^3 + k z^3 with k chosen to vanish there
    if a == b == 0:
        return
    k = Fraction(-(a**3 + b**3), c**3)
    F = TernaryCubicForm.diagonal(1, 1, k) if k else TernaryCubicForm((1, 1, 0, 0, 0, 0, 0, 0, 0, 0))
    s = lift_point(F, (a, b, c))
    assert project_solution(F, s) == ProjectivePoint.of(a, b, c)


def test_lift_rejects_off_curve():
    with pytest.raises(ValueError):
        lift_point(FERMAT, (1, 1, 1))


def test_project_rejects_non_solution():
    with pytest.raises(ValueError):
        project_solution(FERMAT, SystemSolution.of(1, 1, 1, 1, 1, 1))


def test_redundancy_of_square_relation():
    F = TernaryCubicForm.diagonal(1, 1, -2)
    s = lift_point(F, (1, 1, 1))
    assert check_prop35_redundancy(F, s)
    with pytest.raises(ValueError):
        check_prop35_redundancy(FERMAT, lift_point(FERMAT, (1, 0, 1)))


def test_resultant_audit_fermat():
    F1, F2 = generic_combinations(reduced_system(FERMAT, "z"))
    audit = formal_resultant_audit(F1, F2, "W")
    assert audit.formal.is_zero()
    assert not audit.true_degree.is_zero()
    assert audit.degrees == (1, 1)
    js = audit.to_json()
    assert js["formal_is_zero"] and not js["true_degree_is_zero"]


def test_generic_combinations_need_seven_members():
    with pytest.raises(ValueError):
        generic_combinations(full_system(FERMAT))


def test_common_factor_none_for_selmer():
    cf = common_factor_analysis(reduced_system(TernaryCubicForm.diagonal(3, 4, 5), "z"))
    assert cf.kind == "none"
    assert cf.to_json()["kind"] == "none"


def test_common_factor_cases():
    X, Y, Z, W, M, N = MultiPoly.gens(("X", "Y", "Z", "W", "M", "N"))
    lin = common_factor_analysis([(2 * X - 3 * Y) * W, (2 * X - 3 * Y) * (Z + N)])
    assert lin.kind == "linear" and lin.shape_aX_bY
    q = X * X - 2 * Y * Y + Z * Z
    quad = common_factor_analysis([q, 3 * q])
    assert quad.kind == "quadratic" and quad.isotropic and quad.proportional == [True, True]
    assert sum(c * c * k for c, k in zip(quad.vector, (1, -2, 1, 0, 0, 0))) == 0


def test_rewrite_keeps_protected_coefficients():
    F = TernaryCubicForm.diagonal(3, 4, 5)
    full = full_system(F)
    for role in ("Fx", "Fy", "Fz"):
        res = rewrite_with_relations(full[role], role=role)
        assert res.form is not None
        p = res.form.to_poly()
        assert all(p.degree(v) >= 1 for v in ("W", "M", "N"))
        # the difference is a combination of relations, so it vanishes on the Veronese image
        assert (p - full[role].to_poly()).evaluate(SUB) == 0


def test_rewrite_trivial_when_already_complete():
    fx = full_system(TernaryCubicForm((1,) * 10))["Fx"]
    res = rewrite_with_relations(fx, role="Fx")
    assert res.lambdas == (0, 0, 0) and res.searched == 1
