import pytest
from hypothesis import given, strategies as st

from genus_spectra.padic import check_odd_prime, digit_sum, order_class_index, tau, truncated_expansion

PRIMES = st.sampled_from([3, 5, 7, 11])


def test_tau_of_25_at_level_2_is_2():
    # 2*25 = 50 = 0 + 0*5 + 2*25, so the first nonzero digit sits at index 2
    assert tau(25, 5, 2) == 2


def test_truncated_expansion_top_digit_absorbs_rest():
    x = truncated_expansion(1000, 3, 2)
    assert x.digits == (1, 0, 111)
    assert x.value() == 1000


@given(PRIMES, st.integers(0, 10**6), st.integers(0, 6))
def test_expansion_round_trip(p, m, level):
    x = truncated_expansion(m, p, level)
    assert x.value() == m
    assert len(x.digits) == level + 1
    assert all(d < p for d in x.digits[:-1])


@given(PRIMES, st.integers(1, 10**5), st.integers(0, 5))
def test_tau_is_p_adic_valuation_capped(p, y, level):
    v, m = 0, 2 * y
    while m % p == 0 and v < level:
        m //= p
        v += 1
    assert tau(y, p, level) == v


@given(PRIMES, st.integers(0, 10**5))
def test_full_digit_sum_matches_string_conversion(p, m):
    digits = []
    rest = m
    while rest:
        rest, d = divmod(rest, p)
        digits.append(d)
    level = max(len(digits) - 1, 0)
    assert digit_sum(truncated_expansion(m, p, level)) == sum(digits)


@pytest.mark.parametrize("p", [2, 1, 9, 15, -3])
def test_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        check_odd_prime(p)


def test_tau_rejects_zero():
    with pytest.raises(ValueError):
        tau(0, 3, 2)


def test_order_class_index_brackets():
    p, n = 5, 12
    for i in range(1, n):
        k = order_class_index(i, p, n)
        assert i + k * (p - 1) <= n - p < i + (k + 1) * (p - 1)
