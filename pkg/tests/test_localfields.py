import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicaudit.forms import QuadraticForm, TernaryCubicForm
from cubicaudit.localfields import (
    HenselCertificate,
    Place,
    RationalWitness,
    SignChangeCertificate,
    Status,
    diagonalize,
    everywhere_locally_solvable,
    find_isotropic_vector,
    hilbert_symbol,
    is_isotropic_quadratic,
    relevant_primes_cubic,
    root_mod_p,
    singularity_resultant,
    solvable_padic_cubic,
    solvable_real_cubic,
)
from cubicaudit.search import exists_primitive_solution_mod
from strategies import cubics

SELMER = TernaryCubicForm.diagonal(3, 4, 5)


def test_place_parsing():
    assert Place.parse("inf").is_infinite
    assert Place.parse("7") == Place(7)
    with pytest.raises(ValueError):
        Place.parse("6")
    with pytest.raises(ValueError):
        Place.parse("x")


@given(cubics)
@settings(max_examples=60, deadline=None)
def test_real_verdict_always_certified(F):
    v = solvable_real_cubic(F)
    assert v.status is Status.SOLVABLE
    assert v.certificate.verify(F.normalize())


def test_selmer_real_certificate():
    cert = solvable_real_cubic(SELMER).certificate
    assert isinstance(cert, SignChangeCertificate)
    assert (cert.lo, cert.hi) == (-2, 0)


def test_selmer_everywhere_solvable():
    assert relevant_primes_cubic(SELMER) == [2, 3, 5]
    res = everywhere_locally_solvable(SELMER)
    assert res.status is Status.SOLVABLE
    assert [str(v.place) for v in res.verdicts] == ["inf", "2", "3", "5"]
    for v in res.verdicts[1:]:
        assert v.certificate.verify(SELMER)


def test_known_obstruction():
    # x^3 + 2y^3 + 4z^3 has no nontrivial 2-adic zero
    F = TernaryCubicForm.diagonal(1, 2, 4)
    v = solvable_padic_cubic(F, 2)
    assert v.status is Status.UNSOLVABLE
    assert not exists_primitive_solution_mod(F, 2, v.modulus_exponent)
    assert everywhere_locally_solvable(F).value is False


def test_fermat_rational_witness():
    v = solvable_padic_cubic(TernaryCubicForm.diagonal(1, 1, -1), 7)
    assert isinstance(v.certificate, RationalWitness)
    assert v.certificate.point.coords == (1, -1, 0)


def test_hensel_certificate_rejects_wrong_form():
    v = solvable_padic_cubic(SELMER, 5)
    cert = v.certificate
    assert isinstance(cert, HenselCertificate) and cert.verify(SELMER)
    assert not HenselCertificate((5, 5, 5), 5, 1, 0, 0, 3).verify(SELMER)


def test_large_prime_path():
    F = TernaryCubicForm((1, 2, 3, 0, 1, 0, 0, 0, 0, 1))
    v = solvable_padic_cubic(F, 1_000_003)
    assert v.status is Status.SOLVABLE and v.certificate.verify(F)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=5), st.sampled_from([7, 11, 101]))
@settings(max_examples=60, deadline=None)
def test_root_mod_p(coeffs, p):
    r = root_mod_p(coeffs, p)
    roots = [z for z in range(p) if sum(c * z**i for i, c in enumerate(coeffs)) % p == 0]
    if r is None:
        assert roots == []
    else:
        assert r in roots


def test_singularity_resultant():
    assert singularity_resultant(TernaryCubicForm.diagonal(1, 1, 1)) != 0
    # x^3 + y^3 + z^3 - 3xyz = product of three linear forms over Q(zeta): singular
    assert singularity_resultant(TernaryCubicForm((1, 1, 1, 0, 0, 0, 0, 0, 0, -3))) == 0


@given(cubics, st.sampled_from([2, 3, 5]))
@settings(max_examples=40, deadline=None)
def test_padic_verdict_consistent_with_congruences(F, p):
    v = solvable_padic_cubic(F, p, max_depth=8)
    if v.status is Status.SOLVABLE:
        assert v.certificate.verify(F.normalize())
        assert exists_primitive_solution_mod(F, p, 3)
    elif v.status is Status.UNSOLVABLE:
        assert not exists_primitive_solution_mod(F, p, v.modulus_exponent)


# -- Hilbert symbols and quadratic forms ---------------------------------------------------

def test_hilbert_values():
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol(Fraction(1, 4), 7, 7) == 1
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, 2)


nz = st.integers(-60, 60).filter(bool)


@given(nz, nz)
def test_hilbert_product_formula(a, b):
    primes = {2} | {p for p in range(3, 61) if all(p % q for q in range(2, p)) and (a % p == 0 or b % p == 0)}
    prod = hilbert_symbol(a, b, "inf")
    for p in primes:
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1


@given(nz, nz, nz, st.sampled_from(["inf", 2, 3, 5]))
def test_hilbert_bimultiplicative(a, b, c, v):
    assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, -a, v) == 1


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_diagonalize(rows):
    m = [[rows[i][j] + rows[j][i] for j in range(3)] for i in range(3)]
    Q = QuadraticForm(m)
    d, T = diagonalize(Q)
    for i in range(3):
        for j in range(3):
            val = sum(T[r][i] * Q.matrix[r][c] * T[c][j] for r in range(3) for c in range(3))
            assert val == (d[i] if i == j else 0)


@pytest.mark.parametrize(
    "entries, expected",
    [((1, 1, -1), True), ((1, 1, 1), False), ((1, 1, -3), False), ((1, -2), False), ((2, -8), True),
     ((1, 1, 1, -7), False), ((1, 1, 1, 1, -7), True), ((3, 4, 5, 6, 7), False)],
)
def test_isotropy_fixed(entries, expected):
    Q = QuadraticForm.diagonal(entries)
    assert is_isotropic_quadratic(Q) is expected
    if expected:
        w = find_isotropic_vector(Q)
        assert w is not None and Q(w) == 0 and any(w)
    else:
        with pytest.raises(ValueError):
            find_isotropic_vector(Q)


def test_local_isotropy_places():
    Q = QuadraticForm.diagonal((1, 1, -3))
    assert is_isotropic_quadratic(Q, "inf")
    assert not is_isotropic_quadratic(Q, 3)
    assert is_isotropic_quadratic(Q, 5)


def test_nondiagonal_isotropic_vector():
    Q = QuadraticForm([[0, 1], [1, 0]])
    w = find_isotropic_vector(Q)
    assert Q(w) == 0
    Q = QuadraticForm([[1, 2, 0], [2, 1, 1], [0, 1, -5]])
    if is_isotropic_quadratic(Q):
        assert Q(find_isotropic_vector(Q)) == 0


def test_seeded_isotropy_vs_witness():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 4)
        Q = QuadraticForm.diagonal([rng.choice([-1, 1]) * rng.randint(1, 12) for _ in range(n)])
        if is_isotropic_quadratic(Q):
            assert Q(find_isotropic_vector(Q)) == 0
