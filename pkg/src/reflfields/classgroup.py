"""Class numbers and 2-class data of imaginary quadratic fields.

Classes are represented by reduced primitive binary quadratic forms. The
form count is cross-checked against Dirichlet's analytic class number
formula, and the number of ambiguous forms against the genus number
``2**(t-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .numtheory import FundamentalDiscriminant, as_discriminant, character_table


class ReducedForm(NamedTuple):
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_ambiguous(self) -> bool:
        return self.b == 0 or self.a == self.b or self.a == self.c


@dataclass(frozen=True)
class ClassGroupSummary:
    d: FundamentalDiscriminant
    h: int
    ambiguous_count: int
    genus_number: int
    sylow2_order: int
    h_is_power_of_two: bool


def is_power_of_two(h: int) -> bool:
    if h < 1:
        raise ValueError(f"expected a positive integer, got {h}")
    return h & (h - 1) == 0


def reduced_forms(d) -> list[ReducedForm]:
    """One reduced form per class, sorted by ``(a, b)``."""
    fd = as_discriminant(d)
    arr = _kernels.reduced_forms(fd.d)
    return [ReducedForm(int(a), int(b), int(c)) for a, b, c in arr]


def class_number(d) -> int:
    fd = as_discriminant(d)
    return int(_kernels.form_counts(fd.d)[0])


def ambiguous_form_count(d) -> int:
    fd = as_discriminant(d)
    return int(_kernels.form_counts(fd.d)[1])


def class_number_analytic(d) -> int:
    """Class number from ``h = w/(2|d|) * |sum_{a<|d|} a chi(a)|``, exactly."""
    fd = as_discriminant(d)
    chi = character_table(fd).astype(np.int64)
    # |s| < |d|^2 / 2, exact in int64 for every |d| below 4e9
    s = int(np.dot(np.arange(fd.abs_d, dtype=np.int64), chi))
    w = 6 if fd.d == -3 else 4 if fd.d == -4 else 2
    num = w * abs(s)
    den = 2 * fd.abs_d
    if num % den or num == 0:
        raise ArithmeticError(
            f"analytic class number for {fd.d} is not a positive integer: {num}/{den}"
        )
    return num // den


def two_class_data(d) -> ClassGroupSummary:
    fd = as_discriminant(d)
    h, amb = _kernels.form_counts(fd.d)
    h, amb = int(h), int(amb)
    genus = 2 ** (fd.t - 1)
    if amb != genus:
        raise AssertionError(
            f"genus theory violated for d={fd.d}: {amb} ambiguous forms, 2^(t-1)={genus}"
        )
    sylow2 = h & -h
    return ClassGroupSummary(
        d=fd,
        h=h,
        ambiguous_count=amb,
        genus_number=genus,
        sylow2_order=sylow2,
        h_is_power_of_two=is_power_of_two(h),
    )
