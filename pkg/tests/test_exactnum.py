from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubicaudit.exactnum import (
    cube_free_part,
    exact_cbrt,
    exact_sqrt,
    factorize,
    int_valuation,
    is_cube_free,
    is_prime,
    legendre,
    primes_up_to,
    primitive_integer_vector,
    squarefree_integer,
    valuation,
)

nonzero = st.integers(-10**6, 10**6).filter(bool)


def test_small_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(60) if is_prime(n)] == primes_up_to(59)


@given(st.integers(1, 10**9))
def test_factorize_roundtrip(n):
    prod = 1
    for p, e in factorize(n).items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


@given(nonzero, st.sampled_from([2, 3, 5, 7]))
def test_valuation_divides(n, p):
    k = int_valuation(n, p)
    assert n % p**k == 0 and n % p ** (k + 1) != 0


def test_valuation_of_rational():
    assert valuation(Fraction(9, 8), 2) == -3
    assert valuation(Fraction(9, 8), 3) == 2
    assert valuation(0, 5) > 10**9


@given(nonzero)
def test_cube_free_part(n):
    c, r = cube_free_part(n)
    assert is_cube_free(c)
    assert c * r**3 == n


@given(st.fractions(max_denominator=50).filter(bool))
def test_roots_of_powers(q):
    assert exact_cbrt(q**3) == q
    assert exact_sqrt(q * q) == abs(q)


def test_non_roots():
    assert exact_cbrt(2) is None
    assert exact_sqrt(-4) is None
    assert exact_sqrt(Fraction(2, 9)) is None


def test_squarefree_integer():
    assert squarefree_integer(Fraction(12, 5)) == 15
    assert squarefree_integer(-18) == -2


@given(st.integers(1, 200).filter(lambda a: a % 7))
def test_legendre_euler(a):
    assert legendre(a, 7) == (1 if pow(a, 3, 7) == 1 else -1)


def test_primitive_vector():
    assert primitive_integer_vector([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
    with pytest.raises(ValueError):
        primitive_integer_vector([0, 0, 0])
