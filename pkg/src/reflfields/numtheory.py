"""Fundamental discriminants, small-integer factorization and the Kronecker symbol."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels


def distinct_prime_divisors(n: int) -> tuple[int, list[int]]:
    """Return ``(t, primes)`` for ``n >= 2`` by trial division."""
    if n < 2:
        raise ValueError(f"distinct_prime_divisors needs n >= 2, got {n}")
    primes = []
    if n % 2 == 0:
        primes.append(2)
        while n % 2 == 0:
            n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        primes.append(n)
    return len(primes), primes


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def is_fundamental_discriminant(d: int) -> bool:
    """True iff ``d`` is the discriminant of a quadratic field.

    ``d = 1`` (the "discriminant" of Q itself) is not counted.
    """
    if d in (0, 1):
        return False
    r = d % 4
    if r == 1:
        return _is_squarefree(d)
    if r == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


@dataclass(frozen=True)
class FundamentalDiscriminant:
    """A negative fundamental discriminant with its distinct prime divisors."""

    d: int
    abs_d: int
    prime_divisors: tuple[int, ...]
    t: int

    @classmethod
    def from_int(cls, d: int) -> FundamentalDiscriminant:
        if d >= 0 or not is_fundamental_discriminant(d):
            raise ValueError(f"{d} is not a negative fundamental discriminant")
        t, primes = distinct_prime_divisors(-d)
        return cls(d=d, abs_d=-d, prime_divisors=tuple(primes), t=t)

    def __int__(self) -> int:
        return self.d


def as_discriminant(d) -> FundamentalDiscriminant:
    if isinstance(d, FundamentalDiscriminant):
        return d
    return FundamentalDiscriminant.from_int(int(d))


@lru_cache(maxsize=8)
def _enumerate_cached(limit: int) -> tuple[FundamentalDiscriminant, ...]:
    out = []
    for m in range(3, limit):
        if (-m) % 4 not in (0, 1):
            continue
        if is_fundamental_discriminant(-m):
            t, primes = distinct_prime_divisors(m)
            out.append(FundamentalDiscriminant(-m, m, tuple(primes), t))
    return tuple(out)


def enumerate_fundamental_discriminants(limit: int) -> list[FundamentalDiscriminant]:
    """All negative fundamental discriminants with ``|d| < limit``, by increasing ``|d|``."""
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    return list(_enumerate_cached(int(limit)))


def kronecker_symbol(d: int, n: int) -> int:
    """The Kronecker symbol ``(d/n)`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("kronecker_symbol is defined here for n >= 0 only")
    if n == 0:
        return 1 if d in (1, -1) else 0
    res = 1
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5):
            res = -res
    # Jacobi symbol (d/n) for odd n
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a, n = n, a
        a %= n
    return res if n == 1 else 0


def character_table(d) -> np.ndarray:
    """``chi_d(n)`` for ``n = 0 .. |d|-1`` as an int8 array (one full period)."""
    d = int(d.d) if isinstance(d, FundamentalDiscriminant) else int(d)
    return _kernels.kronecker_table(d)
