"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from cubicaudit.forms import TernaryCubicForm

coeff = st.integers(-5, 5)
cubics = st.lists(coeff, min_size=10, max_size=10).filter(any).map(lambda c: TernaryCubicForm(tuple(c)))
cube_free = st.sampled_from([1, 2, 3, 5, 6, 7, 10, 11, 12, 15])
signs = st.sampled_from([1, -1])
diagonal_triples = st.tuples(cube_free, cube_free, cube_free, signs, signs).map(
    lambda t: (t[0] * t[3], t[1] * t[4], t[2])
)
