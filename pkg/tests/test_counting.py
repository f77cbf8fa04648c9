import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from propb.counting import (
    E_LOWER,
    E_UPPER,
    best_l,
    binomial,
    binomial_upper_bound,
    divisors,
    edge_count,
    edge_count_upper_bound,
)
from propb.params import ParameterError, validate_params


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(1, 1) == 1
    assert binomial(8, 2) == 28
    assert binomial(3, 7) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negatives():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


@given(st.integers(0, 200), st.integers(0, 200))
def test_binomial_matches_factorial_definition(n, r):
    if r > n:
        assert binomial(n, r) == 0
    else:
        assert binomial(n, r) == math.factorial(n) // (
            math.factorial(r) * math.factorial(n - r)
        )


# Frozen from the closed form C(2l-1,l) * seq_len^l * C(seq_len, k/l),
# evaluated by hand/bignum for each pair.
EDGE_COUNTS = {
    (2, 1): 24,
    (3, 1): 120,
    (4, 1): 560,
    (2, 2): 192,
    (4, 2): 5376,
    (6, 2): 95_040,
    (3, 3): 40_960,
    (6, 3): 4_915_200,
}


@pytest.mark.parametrize("pair,expected", sorted(EDGE_COUNTS.items()))
def test_edge_count_frozen_values(pair, expected):
    k, l = pair
    assert edge_count(validate_params(k, l)) == expected


def test_e_enclosure_is_tight_and_correct():
    assert E_LOWER < E_UPPER
    assert float(E_UPPER - E_LOWER) < 1e-40
    # the enclosure is far tighter than a double, so both ends round to e
    assert float(E_LOWER) == pytest.approx(math.e, abs=1e-15)
    assert float(E_UPPER) == pytest.approx(math.e, abs=1e-15)


def test_binomial_upper_bound_examples():
    b = binomial_upper_bound(4, 2)
    assert binomial(4, 2) <= b.lower
    assert abs(float(b) - (2 * math.e) ** 2) < 1e-9

    b = binomial_upper_bound(8, 2)
    assert binomial(8, 2) <= b.lower
    assert abs(float(b) - (4 * math.e) ** 2) < 1e-9

    b = binomial_upper_bound(3, 3)
    assert binomial(3, 3) == 1 <= b.lower
    assert abs(float(b) - math.e**3) < 1e-9


def test_binomial_upper_bound_domain():
    with pytest.raises(ValueError):
        binomial_upper_bound(2, 3)
    with pytest.raises(ValueError):
        binomial_upper_bound(4, 0)


@given(st.integers(1, 80), st.integers(1, 80))
def test_binomial_below_bound(n, r):
    if r > n:
        return
    bound = binomial_upper_bound(n, r)
    assert bound.certifies_at_most(binomial(n, r))


def test_edge_count_upper_bound_examples():
    b = edge_count_upper_bound(2, 1)
    assert b.certifies_at_most(24)
    assert abs(float(b) - 2**3 * 2 * 4 * math.e**2) < 1e-6

    b = edge_count_upper_bound(4, 2)
    assert b.certifies_at_most(5376)
    assert abs(float(b) - 2**8 * 16 * 16 * math.e**2) < 1e-3

    b = edge_count_upper_bound(2, 2)
    assert b.certifies_at_most(192)
    assert abs(float(b) - 2**8 * 4 * 4 * math.e) < 1e-6


def test_edge_count_upper_bound_rejects_bad_pairs():
    with pytest.raises(ParameterError):
        edge_count_upper_bound(3, 2)
    with pytest.raises(ParameterError):
        edge_count_upper_bound(2, 3)


def test_bound_dominates_count_small_sweep():
    for k in range(1, 13):
        for l in divisors(k):
            count = edge_count(validate_params(k, l))
            assert edge_count_upper_bound(k, l).certifies_at_most(count), (k, l)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(16) == [1, 2, 4, 8, 16]
    with pytest.raises(ParameterError):
        divisors(0)


def test_best_l_examples():
    # k=2: 24 vs 192; k=4: 560 vs 5376 vs 36_700_160.
    assert best_l(2) == 1
    assert best_l(1) == 1
    assert best_l(4) == 1


@given(st.integers(1, 40))
def test_best_l_is_the_exact_minimizer(k):
    chosen = best_l(k)
    assert k % chosen == 0
    counts = {l: edge_count(validate_params(k, l)) for l in divisors(k)}
    assert counts[chosen] == min(counts.values())
    # ties break toward the smaller divisor
    assert all(counts[l] > counts[chosen] for l in divisors(k) if l < chosen)
