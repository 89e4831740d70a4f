"""Exact integer/rational utilities: valuations, factorization, cube-free parts.

Rationals are :class:`fractions.Fraction` throughout the package; this module
adds the number theory that the standard library does not ship.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class _InfiniteValuation:
    """Valuation of zero. Comparable with ints but refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("cubicaudit.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _InfiniteValuation()


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_str(q: RationalLike) -> str:
    """Serialize as ``"p/q"``, dropping ``/1``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return as_rational(s)


# -- primality and factorization ---------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24 with the first 12 prime bases."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda v: (v * v + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


@lru_cache(maxsize=4096)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel trial division up to a modest bound, then rho
    p, step = 7, (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < 10_000:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return tuple(sorted(factors.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{p: e}``. ``n`` must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return dict(_factor_positive(abs(n)))


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# -- valuations ---------------------------------------------------------------

def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in a nonzero integer (no primality check)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(q: RationalLike, p: int):
    """p-adic valuation of a rational; :data:`INF` for zero."""
    _require_prime(p)
    q = as_rational(q)
    if q == 0:
        return INF
    num, den = q.numerator, q.denominator
    if num % p == 0:
        return int_valuation(num, p)
    if den % p == 0:
        return -int_valuation(den, p)
    return 0


# -- powers and roots ---------------------------------------------------------

def cube_free_part(n: int) -> tuple[int, int]:
    """Split ``n = cubefree * cube**3`` with the sign kept on ``cubefree``."""
    if n == 0:
        raise ValueError("cube_free_part(0) is undefined")
    free, cube = (1 if n > 0 else -1), 1
    for p, e in factorize(n).items():
        free *= p ** (e % 3)
        cube *= p ** (e // 3)
    return free, cube


def is_cube_free(n: int) -> bool:
    return n != 0 and all(e < 3 for e in factorize(n).values())


def integer_cbrt(n: int) -> int | None:
    """Exact integer cube root, or None."""
    if n == 0:
        return 0
    sign = 1 if n > 0 else -1
    a = abs(n)
    # start above the root; Newton then decreases monotonically to the floor
    r = 1 << ((a.bit_length() + 2) // 3)
    while True:
        nxt = (2 * r + a // (r * r)) // 3
        if nxt >= r:
            break
        r = nxt
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c * c == a:
            return sign * c
    return None


def exact_cbrt(q: RationalLike) -> Fraction | None:
    q = as_rational(q)
    num = integer_cbrt(q.numerator)
    den = integer_cbrt(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def exact_sqrt(q: RationalLike) -> Fraction | None:
    """Nonnegative rational square root, or None when q is not a square."""
    q = as_rational(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def squarefree_integer(q: RationalLike) -> int:
    """Squarefree integer in the square class of a nonzero rational."""
    q = as_rational(q)
    if q == 0:
        raise ValueError("0 has no square class")
    n = q.numerator * q.denominator
    out = 1 if n > 0 else -1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return out


def lcm_many(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def gcd_many(values) -> int:
    out = 0
    for v in values:
        out = math.gcd(out, v)
    return out


def primitive_integer_vector(values) -> tuple[int, ...]:
    """Scale rationals to coprime integers with the first nonzero entry positive."""
    vals = [as_rational(v) for v in values]
    if all(v == 0 for v in vals):
        raise ValueError("zero vector has no primitive representative")
    den = lcm_many(v.denominator for v in vals)
    ints = [int(v * den) for v in vals]
    g = gcd_many(abs(i) for i in ints)
    ints = [i // g for i in ints]
    lead = next(i for i in ints if i != 0)
    if lead < 0:
        ints = [-i for i in ints]
    return tuple(ints)


def legendre(a: int, p: int) -> int:
    """Legendre symbol for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, ok in enumerate(sieve) if ok]
