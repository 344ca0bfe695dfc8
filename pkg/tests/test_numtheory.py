import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fundamental_discriminants_sieve, kronecker_brute
from reflfields.numtheory import (
    FundamentalDiscriminant,
    character_table,
    distinct_prime_divisors,
    enumerate_fundamental_discriminants,
    is_fundamental_discriminant,
    kronecker_symbol,
)

SMALL = [fd.d for fd in enumerate_fundamental_discriminants(2000)]


@pytest.mark.parametrize(
    "d, expected",
    [(-3, True), (-12, False), (-9, False), (-4, True), (-8, True), (5, True),
     (8, True), (12, True), (1, False), (0, False), (-16, False), (-1, False)],
)
def test_is_fundamental(d, expected):
    assert is_fundamental_discriminant(d) is expected


def test_enumerate_small():
    got = [fd.d for fd in enumerate_fundamental_discriminants(21)]
    assert got == [-3, -4, -7, -8, -11, -15, -19, -20]
    assert enumerate_fundamental_discriminants(3) == []


def test_enumerate_limit_validation():
    with pytest.raises(ValueError):
        enumerate_fundamental_discriminants(2)


def test_enumerate_matches_sieve(all_discriminants):
    got = [fd.d for fd in all_discriminants]
    assert got == fundamental_discriminants_sieve(100_000)
    assert len(got) == 30392


def test_enumerate_factorizations(all_discriminants):
    for fd in all_discriminants[::37]:
        prod = 1
        for p in fd.prime_divisors:
            prod *= p
            assert fd.abs_d % p == 0
        assert fd.abs_d % prod == 0
        assert fd.t == len(fd.prime_divisors)
        assert is_fundamental_discriminant(fd.d)


@pytest.mark.parametrize(
    "n, t, primes", [(9240, 5, [2, 3, 5, 7, 11]), (4, 1, [2]), (15, 2, [3, 5]), (2, 1, [2])]
)
def test_distinct_prime_divisors(n, t, primes):
    assert distinct_prime_divisors(n) == (t, primes)


def test_distinct_prime_divisors_rejects_small():
    with pytest.raises(ValueError):
        distinct_prime_divisors(1)


def test_from_int():
    fd = FundamentalDiscriminant.from_int(-9240)
    assert fd.t == 5 and fd.abs_d == 9240
    with pytest.raises(ValueError):
        FundamentalDiscriminant.from_int(-12)
    with pytest.raises(ValueError):
        FundamentalDiscriminant.from_int(5)


@pytest.mark.parametrize("d, n, expected", [(-4, 3, -1), (-3, 3, 0), (-7, 2, 1), (-4, 1, 1), (-8, 3, 1)])
def test_kronecker_examples(d, n, expected):
    assert kronecker_symbol(d, n) == expected
    assert kronecker_brute(d, n) == expected


def test_kronecker_matches_brute():
    for d in SMALL[:120]:
        for n in range(0, 300):
            assert kronecker_symbol(d, n) == kronecker_brute(d, n), (d, n)


def test_character_table_matches_scalar():
    for d in SMALL[::5]:
        table = character_table(d)
        assert table.shape == (-d,)
        assert [int(x) for x in table] == [kronecker_symbol(d, n) for n in range(-d)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SMALL), st.integers(1, 5000), st.integers(1, 5000))
def test_kronecker_multiplicative_and_periodic(d, m, n):
    assert kronecker_symbol(d, m * n) == kronecker_symbol(d, m) * kronecker_symbol(d, n)
    assert kronecker_symbol(d, n + abs(d)) == kronecker_symbol(d, n)


def test_character_sums_vanish():
    for d in SMALL:
        assert int(character_table(d).sum()) == 0
