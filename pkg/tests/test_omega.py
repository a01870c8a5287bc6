from hypothesis import given, settings, strategies as st

from genus_spectra.omega import (OmegaLevel, omega_brute, omega_contains, omega_members, omega_weights,
                                 sigma_stable, stable_point_brute)


def naive_members(p, level, upto):
    """Direct unbounded-knapsack closure over the generators, independent of the library search."""
    gens = [p**level, *omega_weights(p, level)]
    ok = [False] * (upto + 1)
    ok[0] = True
    for y in range(1, upto + 1):
        ok[y] = any(g <= y and ok[y - g] for g in gens)
    return {y for y in range(upto + 1) if ok[y]}


def test_level_2_at_5_example_range():
    lev = OmegaLevel(5, 2)
    assert [omega_contains(lev, y) for y in range(63, 67)] == [False, True, True, True]


def test_level_zero_contains_everything():
    assert omega_contains(OmegaLevel(3, 0), 17)
    assert omega_brute(OmegaLevel(3, 0), 17).h == 17


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4))
def test_digit_sum_criterion_matches_knapsack(p, level):
    upto = 3 * p**level
    assert set(omega_members(OmegaLevel(p, level), upto)) == naive_members(p, level, upto)


@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(0, 3000))
def test_witness_evaluates_to_target(p, level, y):
    lev = OmegaLevel(p, level)
    sol = omega_brute(lev, y)
    if sol is not None:
        assert sol.value(lev) == y
        assert sol.h >= 0 and all(x >= 0 for x in sol.x)


def test_sigma_pinned_values():
    assert sigma_stable(3, 2) == 6
    assert sigma_stable(5, 2) == 64
    assert sigma_stable(5, 3) == 564


def test_sigma_matches_search():
    for p in (3, 5, 7):
        for e in (1, 2, 3):
            assert sigma_stable(p, e) == stable_point_brute(p, e)


def test_stable_point_is_a_gap_boundary():
    p, e = 5, 3
    s = sigma_stable(p, e)
    lev = OmegaLevel(p, e)
    assert not omega_contains(lev, s - 1)
    assert all(omega_contains(lev, y) for y in range(s, s + 2 * p**e))
