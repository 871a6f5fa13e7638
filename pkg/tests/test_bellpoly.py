import random
from fractions import Fraction

import pytest

from lahbell.bellpoly import (
    bell_poly_eval,
    bell_poly_ones_is_stirling,
    bell_poly_scaling_check,
    enumerate_partition_vectors,
    faa_di_bruno_nth_derivative,
)
from lahbell.series import Series
from lahbell.tables import factorial, stirling2_explicit


def partitions_into_k_parts(n, k):
    # independent oracle: p(n,k) = p(n-1,k-1) + p(n-k,k)
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    return partitions_into_k_parts(n - 1, k - 1) + partitions_into_k_parts(n - k, k)


def test_partition_vectors_forced_cases():
    only = list(enumerate_partition_vectors(3, 3))
    assert len(only) == 1 and only[0].multiplicities == (3,)
    only = list(enumerate_partition_vectors(3, 2))
    assert len(only) == 1 and only[0].multiplicities == (1, 1)
    assert len(list(enumerate_partition_vectors(6, 3))) == 3


def test_partition_vectors_count_matches_oracle():
    for n in range(1, 15):
        for k in range(1, n + 1):
            got = len(list(enumerate_partition_vectors(n, k)))
            assert got == partitions_into_k_parts(n, k)


def test_partition_vectors_are_unique_and_constrained():
    for n in range(1, 13):
        for k in range(1, n + 1):
            seen = set()
            for vec in enumerate_partition_vectors(n, k):
                assert len(vec.multiplicities) == n - k + 1
                assert sum((i + 1) * l for i, l in enumerate(vec.multiplicities)) == n
                assert sum(vec.multiplicities) == k
                assert vec.multiplicities not in seen
                seen.add(vec.multiplicities)


def test_partition_vectors_reject_bad_indices():
    with pytest.raises(ValueError):
        list(enumerate_partition_vectors(3, 4))
    with pytest.raises(ValueError):
        list(enumerate_partition_vectors(3, 0))


def test_bell_poly_single_block_cases():
    rng = random.Random(1)
    for n in range(1, 8):
        x1 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        assert bell_poly_eval(n, n, [x1]) == x1**n


def test_bell_poly_known_values():
    assert bell_poly_eval(3, 2, [1, 1]) == 3
    assert bell_poly_eval(4, 2, [1, 1, 1]) == 7


def test_bell_poly_rejects_short_xs():
    with pytest.raises(ValueError):
        bell_poly_eval(4, 2, [1, 1])
    with pytest.raises(ValueError):
        bell_poly_eval(4, 5, [1])


def test_ones_evaluation_is_stirling():
    assert bell_poly_ones_is_stirling(4, 2)
    assert bell_poly_ones_is_stirling(9, 4)
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert bell_poly_eval(n, k, [1] * (n - k + 1)) == stirling2_explicit(n, k)


def test_scaling_identity_examples():
    assert bell_poly_scaling_check(3, 2, 2, 3, [1, 1])
    assert bell_poly_scaling_check(4, 2, 1, 1, [2, 3, 4])
    assert bell_poly_scaling_check(5, 3, 0, 7, [1, 2, 3])


def test_scaling_identity_randomized():
    rng = random.Random(0)
    for n in range(1, 9):
        for k in range(1, n + 1):
            for _ in range(5):
                a = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                b = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
                xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n - k + 1)]
                assert bell_poly_scaling_check(n, k, a, b, xs)


def test_faa_di_bruno_chain_rule_base():
    assert faa_di_bruno_nth_derivative([Fraction(3, 2)], [Fraction(5)], 1) == Fraction(15, 2)
    assert faa_di_bruno_nth_derivative([1, 1], [1, 1], 2) == 2


def test_faa_di_bruno_rejects_short_inputs():
    with pytest.raises(ValueError):
        faa_di_bruno_nth_derivative([1], [1, 1], 2)
    with pytest.raises(ValueError):
        faa_di_bruno_nth_derivative([1, 1], [1, 1], 0)


def test_faa_di_bruno_matches_series_composition():
    # n-th derivative of f(h(t)) equals n! times coefficient n of the
    # composed Taylor series, built here as an independent oracle
    rng = random.Random(0)
    for n in range(1, 9):
        for _ in range(4):
            f_derivs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            h_derivs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            outer = Series([0] + [f_derivs[j - 1] / factorial(j) for j in range(1, n + 1)])
            inner = Series([0] + [h_derivs[j - 1] / factorial(j) for j in range(1, n + 1)])
            expected = outer.compose(inner).coefficient(n) * factorial(n)
            assert faa_di_bruno_nth_derivative(f_derivs, h_derivs, n) == expected
