from hypothesis import given, settings, strategies as st

from cubicaudit.forms import ProjectivePoint, TernaryCubicForm
from cubicaudit.search import (
    brute_force_points,
    exists_primitive_solution_mod,
    search_points_cubic,
    solutions_mod,
)
from strategies import cubics


@given(cubics)
@settings(max_examples=40, deadline=None)
def test_fast_search_matches_brute_force(F):
    assert search_points_cubic(F, 12) == brute_force_points(F, 12)


def test_points_are_on_curve_and_within_height():
    F = TernaryCubicForm.diagonal(1, 1, -2)
    pts = search_points_cubic(F, 200)
    assert ProjectivePoint.of(1, 1, 1) in pts
    assert all(F(*p) == 0 and p.height() <= 200 for p in pts)


def test_fermat_only_trivial_points():
    pts = search_points_cubic(TernaryCubicForm.diagonal(1, 1, -1), 500)
    assert set(pts) == {ProjectivePoint.of(1, 0, 1), ProjectivePoint.of(0, 1, 1), ProjectivePoint.of(1, -1, 0)}


def test_selmer_has_no_small_points():
    assert search_points_cubic(TernaryCubicForm.diagonal(3, 4, 5), 300) == []


def test_large_point():
    # 1^3 + 2*... : x^3 + y^3 = 9 z^3 has (2, 1, 1); scale-free check with a bigger solution
    F = TernaryCubicForm.diagonal(1, 1, -9)
    pts = search_points_cubic(F, 1000)
    assert ProjectivePoint.of(2, 1, 1) in pts
    assert ProjectivePoint.of(919, -271, 438) in pts


@given(cubics, st.sampled_from([2, 3, 5]))
@settings(max_examples=30, deadline=None)
def test_solutions_mod_are_primitive_zeros(F, p):
    F = F.normalize()
    for v in solutions_mod(F, p):
        assert F(*v) % p == 0 and any(c % p for c in v)
    assert exists_primitive_solution_mod(F, p, 1) == bool(solutions_mod(F, p))
