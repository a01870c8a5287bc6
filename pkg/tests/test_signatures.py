import pytest
from hypothesis import given, strategies as st

from genus_spectra.signatures import PrimeProfile, Signature, cone_contains, cone_reaches, genus, level, reduced_genus


def test_genus_of_two_handles_no_cones():
    # reduced genus (2-1)*9 = 9, scale p^(n-e) = 27, so g = 27*9 + 1
    assert genus(Signature(2, (0, 0)), PrimeProfile(3, 5, 2)) == 244


def test_riemann_hurwitz_direct():
    prof = PrimeProfile(5, 10, 3)
    sig = Signature(0, (2, 0, 1))
    order = 5**10
    chi_part = (2 * 0 - 2) + 2 * (1 - 1 / 5) + (1 - 1 / 125)
    assert genus(sig, prof) == round(1 + order * chi_part / 2)


@given(st.integers(0, 4), st.lists(st.integers(0, 6), min_size=3, max_size=3))
def test_genus_matches_riemann_hurwitz(h, ms):
    p, n, e = 3, 7, 3
    sig = Signature(h, tuple(ms))
    order = p**n
    twice = order * (2 * h - 2) + sum(m * (order - order // p**i) for i, m in enumerate(ms, start=1))
    assert 2 * (genus(sig, PrimeProfile(p, n, e)) - 1) == twice


def test_parse_and_str_round_trip():
    sig = Signature.parse("(1; 2,0,3)")
    assert sig == Signature(1, (2, 0, 3))
    assert Signature.parse(str(sig)) == sig


def test_level_is_last_nonzero():
    assert level(Signature(3, (0, 0))) == 0
    assert level(Signature(0, (1, 2, 0))) == 2


def test_length_must_match_exponent():
    with pytest.raises(ValueError):
        reduced_genus(Signature(0, (1, 1)), PrimeProfile(3, 6, 3))


def test_cone_membership_and_reach():
    prof = PrimeProfile(3, 6, 3)
    base = Signature(0, (2, 0, 1))
    bigger = Signature(1, (3, 1, 1))
    assert cone_contains(base, bigger)
    assert cone_reaches(base, prof, reduced_genus(bigger, prof))
    assert not cone_contains(base, Signature(0, (2, 1, 0)))


def test_prime_profile_violations():
    assert PrimeProfile(3, 6, 3).violations() == []
    assert PrimeProfile(5, 8, 3).violations()
    assert PrimeProfile(4, 6, 3).violations()
