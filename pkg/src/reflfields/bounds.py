"""Closed-form bound chains: degree bound, discriminant bound, asymptotic cutoff.

All logarithms are natural unless the name says ``log10``. The discriminant
bound is carried in base-10 log space because both the constant ``c2`` and
the final bound overflow a double.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

COVOLUME_CEILING = 2 * 64 * math.pi**2

# Chinburg-Friedman covolume floor  mu > A * exp(B*n - C/h)
CF_SCALE = 0.69
CF_DEGREE_RATE = 0.37
CF_CLASS_TERM = 19.08

# h_k <= 100 * (pi/12)^n * D
CLASS_BOUND_FACTOR = 100.0
DEGREE_CAP = 70


@dataclass(frozen=True)
class BoundsReport:
    covolume_ceiling: float
    degree_bound_real: float
    degree_bound_even: int
    c1_log10: float
    c2_log10: float
    disc_bound_log10: float
    disc_bound_display: str

    def to_dict(self) -> dict:
        return asdict(self)


def degree_bound(h_floor: int = 1) -> tuple[float, int]:
    """Degree bound from comparing the covolume ceiling with the CF floor.

    Returns the real bound and the largest even integer strictly below it
    (fields of definition have even degree).
    """
    if h_floor < 1:
        raise ValueError(f"h_floor must be >= 1, got {h_floor}")
    real = (math.log(COVOLUME_CEILING / CF_SCALE) + CF_CLASS_TERM / h_floor) / CF_DEGREE_RATE
    even = math.ceil(real) - 1
    if even % 2:
        even -= 1
    return real, even


def c1_log10(n: int = DEGREE_CAP) -> float:
    return math.log10(CLASS_BOUND_FACTOR) + n * math.log10(math.pi / 12)


def c2_log10(n: int = DEGREE_CAP) -> float:
    # c2 = 2^n * 2^(4n-5) * pi^(2n-2)
    return (n + 4 * n - 5) * math.log10(2) + (2 * n - 2) * math.log10(math.pi)


def format_power_of_ten(log10_value: float, digits: int = 2) -> str:
    """Render ``10**log10_value`` as ``m.me+E``, rounding the mantissa up.

    Rounding up keeps the display a valid upper bound.
    """
    exponent = math.floor(log10_value)
    mantissa = 10 ** (log10_value - exponent)
    scale = 10 ** (digits - 1)
    mantissa = math.ceil(mantissa * scale - 1e-12) / scale
    if mantissa >= 10:
        mantissa /= 10
        exponent += 1
    return f"{mantissa:.{digits - 1}f}e{exponent}"


def discriminant_bound(n: int = DEGREE_CAP) -> BoundsReport:
    """D <= (128 pi^2 c1 c2)^2 evaluated in log10 space, packaged with the degree bound."""
    l1 = c1_log10(n)
    l2 = c2_log10(n)
    log_bound = 2 * (math.log10(COVOLUME_CEILING) + l1 + l2)
    real, even = degree_bound(1)
    return BoundsReport(
        covolume_ceiling=COVOLUME_CEILING,
        degree_bound_real=real,
        degree_bound_even=even,
        c1_log10=l1,
        c2_log10=l2,
        disc_bound_log10=log_bound,
        disc_bound_display=format_power_of_ten(log_bound),
    )


def asymptotic_volume_floor(abs_d: float) -> float:
    """|d|^{3/2} / (2^{1.5 ln|d| / ln ln|d|} * 16 pi^2), valid for |d| > e."""
    if abs_d <= math.e:
        raise ValueError(f"asymptotic_volume_floor needs abs_d > e, got {abs_d}")
    ld = math.log(abs_d)
    exponent = 1.5 * ld / math.log(ld)
    return abs_d**1.5 / (2.0**exponent * 16 * math.pi**2)


def floor_is_monotone(lo: float, hi: float = 1e9, samples: int = 1000) -> bool:
    grid = np.geomspace(lo, hi, samples)
    values = np.array([asymptotic_volume_floor(x) for x in grid])
    return bool(np.all(np.diff(values) >= 0))


def cutoff_check(limit: float, upper: float = 1e9, samples: int = 1000) -> bool:
    """True iff the asymptotic floor beats the ceiling at ``limit`` and keeps growing to ``upper``."""
    if limit < 10:
        raise ValueError(f"limit must be >= 10, got {limit}")
    if asymptotic_volume_floor(limit) <= COVOLUME_CEILING:
        return False
    return floor_is_monotone(limit, upper, samples)
