import math
import random

import pytest

from oracles import class_number_brute
from reflfields.classgroup import (
    ReducedForm,
    ambiguous_form_count,
    class_number,
    class_number_analytic,
    is_power_of_two,
    reduced_forms,
    two_class_data,
)
from reflfields.numtheory import enumerate_fundamental_discriminants

UP_TO_5000 = enumerate_fundamental_discriminants(5001)


def test_reduced_forms_examples():
    assert set(reduced_forms(-23)) == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}
    assert reduced_forms(-3) == [ReducedForm(1, 1, 1)]
    assert reduced_forms(-4) == [ReducedForm(1, 0, 1)]


@pytest.mark.parametrize("d, h", [(-23, 3), (-4, 1), (-84, 4), (-3, 1), (-39, 4), (-9240, 32)])
def test_class_number(d, h):
    assert class_number(d) == h
    assert class_number_brute(d) == h


@pytest.mark.parametrize("d, h", [(-3, 1), (-4, 1), (-7, 1), (-23, 3), (-84, 4)])
def test_class_number_analytic(d, h):
    assert class_number_analytic(d) == h


@pytest.mark.parametrize("d, amb", [(-84, 4), (-3, 1), (-23, 1), (-39, 2)])
def test_ambiguous_form_count(d, amb):
    assert ambiguous_form_count(d) == amb


def test_two_class_data():
    s = two_class_data(-9240)
    assert (s.d.t, s.genus_number, s.ambiguous_count) == (5, 16, 16)
    assert s.h == 32 and s.sylow2_order == 32 and s.h_is_power_of_two
    s = two_class_data(-3)
    assert (s.h, s.genus_number, s.sylow2_order, s.h_is_power_of_two) == (1, 1, 1, True)
    s = two_class_data(-23)
    assert (s.h, s.genus_number, s.sylow2_order, s.h_is_power_of_two) == (3, 1, 1, False)
    # cyclic of order 4: genus number and 2-Sylow order differ
    s = two_class_data(-39)
    assert (s.genus_number, s.sylow2_order) == (2, 4)


@pytest.mark.parametrize("h, expected", [(1, True), (2, True), (6, False), (16, True), (12, False)])
def test_is_power_of_two(h, expected):
    assert is_power_of_two(h) is expected


def test_is_power_of_two_domain():
    with pytest.raises(ValueError):
        is_power_of_two(0)


def test_forms_invariants():
    for fd in UP_TO_5000[::11]:
        forms = reduced_forms(fd)
        assert len(set(forms)) == len(forms)
        for f in forms:
            a, b, c = f
            assert f.discriminant() == fd.d
            assert abs(b) <= a <= c
            if abs(b) == a or a == c:
                assert b >= 0
            assert math.gcd(math.gcd(a, b), c) == 1
        b0 = fd.abs_d % 2
        assert (1, b0, (b0 * b0 + fd.abs_d) // 4) in forms


def test_forms_brute_force_count():
    for fd in UP_TO_5000[::17]:
        assert class_number(fd) == class_number_brute(fd.d)


def test_class_number_oracle_up_to_5000():
    for fd in UP_TO_5000:
        assert class_number(fd) == class_number_analytic(fd), fd.d


def test_summary_divisibility():
    for fd in UP_TO_5000:
        s = two_class_data(fd)
        assert s.sylow2_order % s.genus_number == 0
        assert s.h % s.sylow2_order == 0
        assert s.h_is_power_of_two == (s.h == s.sylow2_order)


def test_class_number_oracle_random_sample(all_discriminants):
    rng = random.Random(20081)
    pool = [fd for fd in all_discriminants if fd.abs_d > 5000]
    for fd in rng.sample(pool, 100):
        assert class_number(fd) == class_number_analytic(fd), fd.d
