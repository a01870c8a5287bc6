import pytest

from genus_spectra.fsets import MissingRow, f_sets, half, power
from genus_spectra.profile import (AT_LEAST_TWO, ONE, FlagRequired, GroupProfile, InvalidProfile, admissible,
                                   needed_flags, require_valid, validate)
from genus_spectra.signatures import Signature


def test_type_three_needs_p_at_least_five():
    with pytest.raises(InvalidProfile, match="type III requires p ≥ 5"):
        require_valid(GroupProfile.of(3, 5, 2, "III"))


def test_ed_class_follows_order():
    assert GroupProfile.of(5, 10, 3, "I").ed_class == ONE
    assert GroupProfile.of(5, 11, 3, "I").ed_class == AT_LEAST_TWO
    assert validate(GroupProfile.of(5, 10, 3, "I", AT_LEAST_TWO))


def test_json_round_trip():
    gp = GroupProfile.of(5, 6, 2, "IV", exp_g1=5)
    assert GroupProfile.from_json_dict(gp.to_json_dict()) == gp


def test_flags_reported_and_required():
    gp = GroupProfile.of(5, 7, 2, "III")
    assert "ppp_type" in needed_flags(gp)
    with pytest.raises(FlagRequired):
        f_sets(gp)


def test_expr_evaluation():
    assert half(1, 2).at(5, 3) == (125 - 2 * 25 - 1) // 2
    assert power(-2).at(7, 2) == 47
    with pytest.raises(ArithmeticError):
        half(1, const=0).at(3, 1)


def test_blank_row_raises_on_printed_layer_and_is_filled_by_errata():
    gp = GroupProfile.of(5, 6, 2, "IV", exp_g1=5)
    with pytest.raises(MissingRow):
        f_sets(gp)
    fam = f_sets(gp, errata=True)
    assert "erratum" in fam.source
    assert fam[2] == {24, 11, 9, 7}
    assert fam[1] == {2, 3}


def test_typo_erratum_adds_value_of_one_handle():
    gp = GroupProfile.of(5, 11, 3, "III")
    assert 4 not in f_sets(gp)[1]
    assert 4 in f_sets(gp, errata=True)[1]


def test_incompatible_order_and_exponent_rejected():
    with pytest.raises(InvalidProfile, match="incompatible"):
        f_sets(GroupProfile.of(3, 6, 2, "I"))


def test_type_five_exponent_p2_row_is_corrected_only_by_errata():
    gp = GroupProfile.of(3, 5, 2, "V")
    sig = Signature(0, (1, 2))
    assert not admissible(gp, sig)
    assert admissible(gp, sig, errata=True)


def test_order_729_gaps_are_corrected_only_by_errata():
    four = GroupProfile.of(3, 6, 3, "IV")
    five = GroupProfile.of(3, 6, 3, "V")
    for gp, sig in ((four, (2, 0, 2)), (four, (0, 4, 0)), (five, (0, 2, 2)), (five, (4, 0, 0))):
        assert not admissible(gp, Signature(0, sig))
        assert admissible(gp, Signature(0, sig), errata=True)


def test_type_one_order_729_admits_small_vector():
    assert admissible(GroupProfile.of(3, 6, 3, "I"), Signature(0, (2, 0, 1)))
