import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pisano_codes.errors import DegeneratePrimeError, InvalidInputError, OutOfRangeError
from pisano_codes.fib_arith import (
    Case,
    PisanoProfile,
    fib_pair_mod,
    generalized_period,
    naive_period,
    order,
    pisano_period,
    pisano_profile,
    rank,
)

from conftest import naive_fib, naive_pisano, odd_primes


@pytest.mark.parametrize(
    "n, m, expected",
    [
        (0, 7, (0, 1)),
        (10, 7, (55 % 7, 89 % 7)),
        (8, 3, (0, 1)),
    ],
)
def test_fib_pair_examples(n, m, expected):
    assert fib_pair_mod(n, m) == expected
    assert expected == naive_fib(n, m)


@pytest.mark.parametrize("m", [2, 3, 7, 11, 13, 101])
def test_fib_pair_agrees_with_iteration(m):
    a, b = 0, 1
    for n in range(1000):
        assert fib_pair_mod(n, m) == (a, b)
        a, b = b, (a + b) % m


@given(st.integers(0, 10**6), st.integers(2, 10**9))
def test_fib_pair_doubling_identity(n, m):
    # F_{2n} = F_n (2 F_{n+1} - F_n) checked through the public function
    f, g = fib_pair_mod(n, m)
    assert fib_pair_mod(2 * n, m)[0] == f * (2 * g - f) % m


def test_fib_pair_rejects_small_modulus():
    with pytest.raises(InvalidInputError):
        fib_pair_mod(3, 1)


@pytest.mark.parametrize("m, expected", [(3, 8), (11, 10), (137, 276), (1, 1)])
def test_pisano_examples(m, expected):
    assert pisano_period(m) == expected


def test_pisano_zero_modulus():
    with pytest.raises(InvalidInputError):
        pisano_period(0)


def test_pisano_matches_naive_oracle_below_1000():
    for m in range(1, 1000):
        assert pisano_period(m) == naive_pisano(m), m


@pytest.mark.parametrize("p, e", [(23, 24), (13, 7), (89, 11)])
def test_rank_examples(p, e):
    assert rank(p) == e
    # oracle: first zero of the sequence
    n, (a, b) = 1, (1, 1)
    while a:
        a, b = b, (a + b) % p
        n += 1
    assert n == e


@pytest.mark.parametrize("p, k", [(11, 1), (23, 2), (13, 4)])
def test_order_examples(p, k):
    assert order(p) == k


@pytest.mark.parametrize("bad", [1, 4, 10, 2, 5])
def test_rank_rejects_bad_primes(bad):
    with pytest.raises(InvalidInputError):
        rank(bad)


def test_out_of_range_prime():
    with pytest.raises(OutOfRangeError):
        pisano_profile(2**31 + 11)


@pytest.mark.parametrize(
    "p, expected",
    [
        (23, PisanoProfile(23, 48, 24, 2, Case.IRREDUCIBLE)),
        (11, PisanoProfile(11, 10, 10, 1, Case.SPLIT)),
        (61, PisanoProfile(61, 60, 15, 4, Case.SPLIT)),
    ],
)
def test_profile_examples(p, expected):
    assert pisano_profile(p) == expected


@pytest.mark.parametrize("p", [2, 5])
def test_profile_degenerate(p):
    with pytest.raises(DegeneratePrimeError):
        pisano_profile(p)


def test_profile_invariants_below_2000():
    for p in odd_primes(3, 2000):
        prof = pisano_profile(p)
        assert prof.K in (1, 2, 4)
        assert prof.e * prof.K == prof.N
        if p % 10 in (3, 7):
            assert prof.case is Case.IRREDUCIBLE
            assert (2 * (p + 1)) % prof.N == 0 and prof.N % 4 == 0 and (prof.N // 2) % prof.e == 0
        else:
            assert prof.case is Case.SPLIT
            assert (p - 1) % prof.N == 0


def test_generalized_period_examples():
    assert generalized_period(0, 0, 7) == 1
    assert generalized_period(0, 1, 3) == 8
    lucas = generalized_period(2, 1, 11)
    # oracle: iterate Lucas numbers mod 11 directly
    seq = [2, 1]
    while (seq[-2], seq[-1]) != (2, 1) or len(seq) == 2:
        seq.append((seq[-1] + seq[-2]) % 11)
    assert lucas == len(seq) - 2
    assert 10 % lucas == 0


def test_generalized_period_divides_pisano():
    rng = random.Random(2024)
    for _ in range(500):
        m = rng.randint(2, 400)
        a, b = rng.randrange(m), rng.randrange(m)
        assert pisano_period(m) % generalized_period(a, b, m) == 0


def test_naive_period_reduces_inputs():
    assert naive_period(13, 14, 13) == naive_period(0, 1, 13)
