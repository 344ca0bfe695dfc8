"""Enclosures for L(2, chi_d) and the Dedekind zeta value zeta_k(2).

For imaginary quadratic k of discriminant d, ``zeta_k(2) = zeta(2) L(2, chi_d)``.
The L-value is a partial sum of the character series plus a tail bound from
Abel summation: the character partial sums are bounded by |d|, so

    |sum_{n>N} chi(n)/n^2| <= 2|d| / N^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .numtheory import as_discriminant, character_table

_EPS = 2.0**-52
_INF = math.inf

DEFAULT_MULTIPLIER = 1000


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


@dataclass(frozen=True)
class RealBracket:
    """Closed interval ``[lo, hi]`` that contains the true value.

    Arithmetic rounds outward by one ulp per operation, which is enough to
    absorb the round-to-nearest error of the underlying float op.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: float) -> RealBracket:
        return cls(x, x)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: RealBracket) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __mul__(self, other):
        if not isinstance(other, RealBracket):
            other = RealBracket.point(float(other))
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RealBracket(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RealBracket):
            other = RealBracket.point(float(other))
        if other.lo <= 0.0 <= other.hi:
            raise ZeroDivisionError("divisor bracket contains zero")
        q = (self.lo / other.lo, self.lo / other.hi, self.hi / other.lo, self.hi / other.hi)
        return RealBracket(_down(min(q)), _up(max(q)))


# math.pi rounds down: pi - math.pi ~ 1.2e-16 < 1 ulp
PI = RealBracket(math.pi, _up(math.pi))
PI_SQUARED = PI * PI
ZETA_TWO = PI_SQUARED / 6


def series_terms(abs_d: int, multiplier: int = DEFAULT_MULTIPLIER) -> int:
    return multiplier * (math.isqrt(abs_d - 1) + 1)


def l_two_chi(d, multiplier: int = DEFAULT_MULTIPLIER) -> RealBracket:
    """Bracket for ``L(2, chi_d)`` from ``multiplier * ceil(sqrt|d|)`` terms."""
    fd = as_discriminant(d)
    n_terms = series_terms(fd.abs_d, multiplier)
    s = float(_kernels.l_series_sum(character_table(fd), n_terms))
    # sum of |terms| <= zeta(2) < 1.7, so n_terms * eps bounds the accumulated rounding
    pad = n_terms * _EPS
    tail = 2.0 * fd.abs_d / (float(n_terms) * float(n_terms))
    return RealBracket(_down(s - pad - tail), _up(s + pad + tail))


def dedekind_zeta_two(d, multiplier: int = DEFAULT_MULTIPLIER) -> RealBracket:
    return ZETA_TWO * l_two_chi(d, multiplier)
