import pytest

from genus_spectra.omega import sigma_stable
from genus_spectra.profile import GroupProfile, InvalidProfile
from genus_spectra.signatures import Signature, genus, reduced_genus
from genus_spectra.spectrum import (admissible_signatures, assemble, default_bound, enumerate_window,
                                    min_genus, stable_upper)


def test_type_two_small_window_agrees():
    gp = GroupProfile.of(3, 5, 2, "II")
    a, b = assemble(gp, 60), enumerate_window(gp, 60)
    assert a.reduced_values == b.reduced_values
    assert a.min_reduced == 3


@pytest.mark.parametrize("args", [(5, 11, 3, "I"), (5, 10, 3, "II"), (7, 9, 2, "III"), (3, 6, 3, "V")])
def test_two_routes_on_sample_profiles(args):
    p, n, e, t = args
    flags = {"ppp_type": False} if t == "III" else {}
    gp = GroupProfile.of(p, n, e, t, **flags)
    bound = default_bound(gp)
    assert assemble(gp, bound).reduced_values == enumerate_window(gp, bound).reduced_values


def test_enumeration_matches_direct_signature_scan():
    """Every enumerated value comes from a signature whose genus formula reproduces it."""
    gp = GroupProfile.of(3, 5, 2, "I")
    prof = gp.prime_profile
    for sig, g in admissible_signatures(gp, 40):
        assert reduced_genus(sig, prof) == g
        assert genus(sig, prof) == 27 * g + 1


def test_gaps_lie_below_stable_point():
    gp = GroupProfile.of(5, 11, 3, "IV")
    w = enumerate_window(gp, default_bound(gp))
    assert w.stable_confirmed
    assert all(g < w.stable_reduced for g in w.gaps)


def test_full_genera_are_scaled_values():
    gp = GroupProfile.of(3, 5, 2, "II")
    w = enumerate_window(gp, 30)
    assert w.full_genera() == [27 * v + 1 for v in w.reduced_values]


def test_multiples_of_p_recovered_above_stable_point():
    p, e = 5, 3
    gp = GroupProfile.of(p, 11, e, "II")
    bound = default_bound(gp)
    present = set(enumerate_window(gp, bound).reduced_values)
    start = sigma_stable(p, e) - p**e
    assert all(v in present for v in range(start - start % p + p, bound + 1, p))


def test_minimum_genus_examples():
    assert min_genus(GroupProfile.of(5, 10, 3, "II")) == 55
    assert min_genus(GroupProfile.of(5, 10, 3, "IV")) == 45
    assert enumerate_window(GroupProfile.of(5, 10, 3, "II"), 125).min_reduced == 55


def test_stable_point_type_one():
    assert stable_upper(GroupProfile.of(5, 11, 3, "I"), default_bound(GroupProfile.of(5, 11, 3, "I"))) == 439


def test_invalid_profile_rejected():
    with pytest.raises(InvalidProfile):
        enumerate_window(GroupProfile.of(3, 5, 2, "III"), 50)


def test_type_one_p3_small_genus_signature():
    gp = GroupProfile.of(3, 6, 3, "I")
    assert reduced_genus(Signature(0, (2, 0, 1)), gp.prime_profile) == 4
    assert enumerate_window(gp, 27).min_reduced == 4
