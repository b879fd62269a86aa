from collections import Counter

import numpy as np
import pytest

from pisano_codes.code_builder import (
    _coordinates,
    Verdict,
    analyze_code,
    build_generator_matrix,
    closed_form_weights,
    codeword,
    dual_distance,
    enumerate_weights,
    is_mds,
    poly_divmod,
    verify_cyclic,
)
from pisano_codes.errors import InvariantViolation, TooLargeError
from pisano_codes.fib_arith import pisano_profile

from conftest import odd_primes


def python_weights(p):
    """Weight histogram by explicit Fibonacci-type sequences, no numpy."""
    N = pisano_profile(p).N
    hist = Counter()
    for a in range(p):
        for b in range(p):
            seq, x, y = [], a, b
            for _ in range(N):
                seq.append(x)
                x, y = y, (x + y) % p
            hist[sum(1 for s in seq if s)] += 1
    return dict(hist)


def proportional_pair_exists(cols, p):
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            for c in range(1, p):
                if all((c * x - y) % p == 0 for x, y in zip(cols[i], cols[j])):
                    return True
    return False


def test_matrix_p13_first_row():
    m = build_generator_matrix(pisano_profile(13))
    row = m.rows[0]
    assert list(row[:8]) == [0, 1, 1, 2, 3, 5, 8, 0]
    assert [i for i, v in enumerate(row) if v == 0] == list(range(0, 28, 7))
    assert list(m.rows[1]) == list(np.roll(row, 1))


def test_matrix_p11_rows():
    m = build_generator_matrix(pisano_profile(11))
    assert list(m.rows[0]) == [4, 5, 9, 3, 1, 4, 5, 9, 3, 1]
    assert list(m.rows[1]) == [8, 9, 6, 4, 10, 3, 2, 5, 7, 1]


@pytest.mark.parametrize("p", odd_primes(3, 120))
def test_matrix_rank_two(p):
    m = build_generator_matrix(pisano_profile(p))
    a, b = m.rows
    assert any((int(a[i]) * int(b[j]) - int(a[j]) * int(b[i])) % p for i in range(m.N) for j in range(i + 1, m.N))


def test_codeword_type():
    m = build_generator_matrix(pisano_profile(11))
    w = codeword(m, 1, 0)
    assert [s.value for s in w.symbols] == list(m.rows[0])
    assert w.weight == 10


@pytest.mark.parametrize("p", [3, 7, 11, 13, 17, 19, 23])
def test_enumeration_against_python_oracle(p):
    m = build_generator_matrix(pisano_profile(p))
    assert enumerate_weights(m) == python_weights(p)


@pytest.mark.parametrize(
    "p, expected",
    [
        (11, {0: 1, 9: 100, 10: 20}),
        (23, {0: 1, 46: 528}),
        (13, {0: 1, 24: 84, 28: 84}),
    ],
)
def test_enumerate_examples(p, expected):
    assert enumerate_weights(build_generator_matrix(pisano_profile(p))) == expected


def test_enumerate_threaded_matches_serial():
    m = build_generator_matrix(pisano_profile(41))
    assert enumerate_weights(m, workers=3) == enumerate_weights(m)


def test_enumeration_guard():
    m = build_generator_matrix(pisano_profile(3167))
    with pytest.raises(TooLargeError):
        enumerate_weights(m)


@pytest.mark.parametrize(
    "p, expected",
    [
        (11, {0: 1, 9: 100, 10: 20}),
        (43, {0: 1, 86: 1848}),
        (7, {0: 1, 14: 48}),
    ],
)
def test_closed_form_examples(p, expected):
    assert closed_form_weights(pisano_profile(p)) == expected


@pytest.mark.parametrize("p", odd_primes(3, 400))
def test_closed_form_pless_moments(p):
    prof = pisano_profile(p)
    w = closed_form_weights(prof)
    assert w.total - 1 == p * p - 1
    assert sum(k * f for k, f in w.items()) == prof.N * (p - 1) * p
    assert set(w.nonzero_weights) <= {prof.N - prof.K, prof.N}
    one_weight = prof.N == prof.K * (p + 1)
    assert one_weight == (prof.N not in w)


@pytest.mark.parametrize("p, expected", [(11, 3), (41, 2), (61, 2)])
def test_dual_distance_examples(p, expected):
    assert dual_distance(build_generator_matrix(pisano_profile(p))) == expected


@pytest.mark.parametrize("p", [3, 7, 11, 13, 19, 29, 31, 41])
def test_dual_distance_against_scalar_search(p):
    m = build_generator_matrix(pisano_profile(p))
    cols = [tuple(int(v) for v in c) for c in m.columns()]
    assert dual_distance(m) == (2 if proportional_pair_exists(cols, p) else 3)


@pytest.mark.parametrize("p", odd_primes(3, 300))
def test_dual_distance_three_iff_rank_is_period(p):
    prof = pisano_profile(p)
    assert (dual_distance(build_generator_matrix(prof)) == 3) == (prof.e == prof.N)


@pytest.mark.parametrize("p, expected", [(11, True), (89, False), (13, False)])
def test_is_mds_examples(p, expected):
    prof = pisano_profile(p)
    assert is_mds(prof, dual_distance(build_generator_matrix(prof))) is expected


def test_is_mds_inconsistent_input():
    with pytest.raises(InvariantViolation):
        is_mds(pisano_profile(11), 2)
    with pytest.raises(InvariantViolation):
        is_mds(pisano_profile(13), 3)


@pytest.mark.parametrize("p", [11, 13, 3, 7, 61, 89, 137])
def test_verify_cyclic(p):
    prof = pisano_profile(p)
    report = verify_cyclic(prof, build_generator_matrix(prof))
    assert report.ok


def test_shift_of_zero_word():
    prof = pisano_profile(11)
    m = build_generator_matrix(prof)
    assert _coordinates(m, np.roll(m.encode(0, 0), 1)) == (0, 0)


def test_poly_divmod_oracle():
    # (x^2 + x - 1)(x + 3) = x^3 + 4x^2 + 2x - 3 over F_11
    q, r = poly_divmod([-3, 2, 4, 1], [-1, 1, 1], 11)
    assert q == [3, 1] and r == [0]


@pytest.mark.parametrize("p", [13, 17, 37, 47, 107, 113])
def test_irreducible_mixed_codewords(p):
    prof = pisano_profile(p)
    m = build_generator_matrix(prof)
    for l1 in range(1, p):
        for l2 in range(1, p):
            assert np.count_nonzero(m.encode(l1, l2)) in (prof.N - prof.K, prof.N)
        assert np.count_nonzero(m.encode(l1, 0)) == prof.N - prof.K


def test_analyze_code_verdicts():
    assert analyze_code(pisano_profile(23)).verdict is Verdict.ONE_WEIGHT
    assert analyze_code(pisano_profile(43)).verdict is Verdict.ONE_WEIGHT
    a = analyze_code(pisano_profile(11))
    assert a.verdict is Verdict.TWO_WEIGHT and a.mds and a.dual_uniformly_packed


def test_analyze_code_skips_brute_force_for_large_p():
    a = analyze_code(pisano_profile(4001))
    assert a.brute_weights is None and a.notes
