"""Hot inner loops: character tables, L-series partial sums, reduced forms.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version. The numpy path is used when numba is missing or when the
environment variable ``REFLFIELDS_PURE_NUMPY`` is set to a non-empty value
other than ``0``. Both paths return identical integer results; the float
L-series sums agree to within the accumulation-error padding applied by
:mod:`reflfields.lfunc`.
"""

from __future__ import annotations

import math
import os

import numpy as np

_flag = os.environ.get("REFLFIELDS_PURE_NUMPY", "")
_want_numba = _flag in ("", "0")

try:
    if not _want_numba:
        raise ImportError
    from numba import njit
except ImportError:
    njit = None

USE_NUMBA = njit is not None
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def _odd_prime_factors(n):
    primes = []
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
    return primes


def kronecker_table_np(d):
    """chi_d(n) for n = 0 .. |d|-1, built from the prime-discriminant split.

    A fundamental d factors as a product of prime discriminants p* = (-1)^((p-1)/2) p
    for odd p, times one of -4, 8, -8 when d is even. By reciprocity
    chi_{p*}(n) = (n/p), a Legendre symbol that is a lookup in the table of
    squares mod p.
    """
    m = abs(d)
    n = np.arange(m, dtype=np.int64)
    chi = np.ones(m, dtype=np.int64)
    odd_part = 1
    for p in _odd_prime_factors(m):
        leg = -np.ones(p, dtype=np.int64)
        leg[(np.arange(p, dtype=np.int64) ** 2) % p] = 1
        leg[0] = 0
        chi *= leg[n % p]
        odd_part *= p if p % 4 == 1 else -p
    two_part = d // odd_part
    if two_part == -4:
        chi *= np.array([0, 1, 0, -1], dtype=np.int64)[n % 4]
    elif two_part == 8:
        chi *= np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int64)[n % 8]
    elif two_part == -8:
        chi *= np.array([0, 1, 0, 1, 0, -1, 0, -1], dtype=np.int64)[n % 8]
    elif two_part != 1:
        raise ValueError(f"{d} is not a fundamental discriminant")
    return chi.astype(np.int8)


def l_series_sum_np(table, n_terms):
    m = table.shape[0]
    total = 0.0
    block = 1 << 20
    for start in range(1, n_terms + 1, block):
        n = np.arange(start, min(start + block, n_terms + 1), dtype=np.int64)
        nf = n.astype(np.float64)
        total += float(np.sum(table[n % m].astype(np.float64) / (nf * nf)))
    return total


def reduced_forms_np(d):
    m = -d
    amax = math.isqrt(m // 3)
    if amax < 1:
        return np.empty((0, 3), dtype=np.int64)
    a = np.arange(1, amax + 1, dtype=np.int64)[:, None]
    b = np.arange(-amax + 1, amax + 1, dtype=np.int64)[None, :]
    a, b = np.broadcast_arrays(a, b)
    num = b * b + m
    keep = (np.abs(b) <= a) & (b != -a) & (num % (4 * a) == 0)
    a, b, num = a[keep], b[keep], num[keep]
    c = num // (4 * a)
    keep = (c > a) | ((c == a) & (b >= 0))
    a, b, c = a[keep], b[keep], c[keep]
    keep = np.gcd(np.gcd(a, b), c) == 1
    out = np.stack([a[keep], b[keep], c[keep]], axis=1)
    order = np.lexsort((out[:, 1], out[:, 0]))
    return out[order]


def form_counts_np(d):
    forms = reduced_forms_np(d)
    a, b, c = forms[:, 0], forms[:, 1], forms[:, 2]
    amb = int(np.count_nonzero((b == 0) | (a == b) | (a == c)))
    return forms.shape[0], amb


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if USE_NUMBA:

    @njit(cache=True)
    def _kron_nb(d, n):
        if n == 0:
            return 1 if (d == 1 or d == -1) else 0
        res = 1
        while n % 2 == 0:
            n //= 2
            if d % 2 == 0:
                return 0
            r8 = d % 8
            if r8 == 3 or r8 == 5:
                res = -res
        a = d % n
        while a != 0:
            while a % 2 == 0:
                a //= 2
                r8 = n % 8
                if r8 == 3 or r8 == 5:
                    res = -res
            if a % 4 == 3 and n % 4 == 3:
                res = -res
            a, n = n, a
            a = a % n
        return res if n == 1 else 0

    @njit(cache=True)
    def kronecker_table_nb(d):
        m = abs(d)
        out = np.empty(m, dtype=np.int8)
        for n in range(m):
            out[n] = _kron_nb(d, n)
        return out

    @njit(cache=True)
    def l_series_sum_nb(table, n_terms):
        m = table.shape[0]
        total = 0.0
        r = 0
        for n in range(1, n_terms + 1):
            r += 1
            if r == m:
                r = 0
            c = table[r]
            if c != 0:
                x = float(n)
                total += c / (x * x)
        return total

    @njit(cache=True)
    def _gcd(x, y):
        x = abs(x)
        y = abs(y)
        while y:
            x, y = y, x % y
        return x

    @njit(cache=True)
    def reduced_forms_nb(d):
        m = -d
        amax = 1
        while 3 * (amax + 1) * (amax + 1) <= m:
            amax += 1
        if 3 > m:
            amax = 0
        cap = 16
        out = np.empty((cap, 3), dtype=np.int64)
        k = 0
        for a in range(1, amax + 1):
            for b in range(-a + 1, a + 1):
                num = b * b + m
                if num % (4 * a) != 0:
                    continue
                c = num // (4 * a)
                if c < a or (c == a and b < 0):
                    continue
                if _gcd(_gcd(a, b), c) != 1:
                    continue
                if k == cap:
                    cap *= 2
                    grown = np.empty((cap, 3), dtype=np.int64)
                    grown[:k] = out[:k]
                    out = grown
                out[k, 0] = a
                out[k, 1] = b
                out[k, 2] = c
                k += 1
        return out[:k].copy()

    @njit(cache=True)
    def form_counts_nb(d):
        m = -d
        h = 0
        amb = 0
        a = 1
        while 3 * a * a <= m:
            for b in range(-a + 1, a + 1):
                num = b * b + m
                if num % (4 * a) != 0:
                    continue
                c = num // (4 * a)
                if c < a or (c == a and b < 0):
                    continue
                if _gcd(_gcd(a, b), c) != 1:
                    continue
                h += 1
                if b == 0 or b == a or c == a:
                    amb += 1
            a += 1
        return h, amb

    kronecker_table = kronecker_table_nb
    l_series_sum = l_series_sum_nb
    reduced_forms = reduced_forms_nb
    form_counts = form_counts_nb
else:
    kronecker_table = kronecker_table_np
    l_series_sum = l_series_sum_np
    reduced_forms = reduced_forms_np
    form_counts = form_counts_np
